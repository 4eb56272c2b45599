#include "toricmcm/monomial.hpp"

#include <algorithm>

#include "toricmcm/arith.hpp"

namespace toricmcm {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.coeff = a.coeff * b.coeff;
  r.ue = a.ue;
  r.ye = a.ye;
  for (size_t i = 0; i < r.ue.size(); ++i)
    r.ue[i] = checked_add(r.ue[i], b.ue[i]);
  for (size_t i = 0; i < r.ye.size(); ++i)
    r.ye[i] = checked_add(r.ye[i], b.ye[i]);
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.coeff = a.coeff * fq_inv(b.coeff);
  r.ue = a.ue;
  r.ye = a.ye;
  for (size_t i = 0; i < r.ue.size(); ++i) {
    r.ue[i] -= b.ue[i];
    if (r.ue[i] < 0) throw ValidationError("monomial division not exact");
  }
  for (size_t i = 0; i < r.ye.size(); ++i) {
    r.ye[i] -= b.ye[i];
    if (r.ye[i] < 0) throw ValidationError("monomial division not exact");
  }
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.ue.size(); ++i)
    if (a.ue[i] > b.ue[i]) return false;
  for (size_t i = 0; i < a.ye.size(); ++i)
    if (a.ye[i] > b.ye[i]) return false;
  return true;
}

Monomial mono_pow(const Monomial& a, long long e) {
  Monomial r;
  r.coeff = fq_pow(a.coeff, e);
  r.ue = a.ue;
  r.ye = a.ye;
  for (auto& x : r.ue) x = checked_mul(x, e);
  for (auto& x : r.ye) x = checked_mul(x, e);
  return r;
}

namespace {

long long total(const Expo& e) {
  long long t = 0;
  for (auto x : e) t += x;
  return t;
}

int cmp_ll(long long a, long long b) { return a < b ? -1 : (a > b ? 1 : 0); }

// degrevlex on one block: higher degree first; on ties the monomial with the
// smaller exponent in the last differing position is bigger
int cmp_degrevlex(const Expo& a, const Expo& b) {
  int c = cmp_ll(total(a), total(b));
  if (c != 0) return c;
  for (int i = int(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_lex(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case kULexYDegrevlex: {
      int c = cmp_lex(a.ue, b.ue);
      if (c != 0) return c;
      return cmp_degrevlex(a.ye, b.ye);
    }
    case kUDegrevlexYDegrevlex: {
      int c = cmp_degrevlex(a.ue, b.ue);
      if (c != 0) return c;
      return cmp_degrevlex(a.ye, b.ye);
    }
    case kSaturating: {
      size_t n = a.ue.size();
      auto at = [&](const Monomial& m, size_t i) {
        return i < n ? m.ue[i] : m.ye[i - n];
      };
      size_t vars = n + a.ye.size();
      long long wa = 0, wb = 0;
      for (size_t i = 0; i < vars; ++i) {
        wa += weights[i] * at(a, i);
        wb += weights[i] * at(b, i);
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      // cheapest variable: smaller exponent is bigger
      if (at(a, cheap_var) != at(b, cheap_var))
        return at(a, cheap_var) < at(b, cheap_var) ? 1 : -1;
      for (size_t i = 0; i < vars; ++i) {
        if (int(i) == cheap_var) continue;
        if (at(a, i) != at(b, i)) return at(a, i) < at(b, i) ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

Poly poly_from(const std::vector<Monomial>& terms, const MonomialOrder& ord) {
  Poly p;
  p.terms = terms;
  std::sort(p.terms.begin(), p.terms.end(),
            [&](const Monomial& a, const Monomial& b) {
              return ord.compare(a, b) > 0;
            });
  // collect equal exponent vectors
  std::vector<Monomial> out;
  for (auto& t : p.terms) {
    if (!out.empty() && out.back().same_exponents(t)) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(t);
    }
  }
  p.terms.clear();
  for (auto& t : out)
    if (!t.coeff.is_zero()) p.terms.push_back(t);
  return p;
}

Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  std::vector<Monomial> all = a.terms;
  all.insert(all.end(), b.terms.begin(), b.terms.end());
  return poly_from(all, ord);
}

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& t : r.terms) t.coeff = -t.coeff;
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  std::vector<Monomial> all;
  all.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) all.push_back(mono_mul(s, t));
  return poly_from(all, ord);
}

bool poly_equal(const Poly& a, const Poly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].coeff == b.terms[i].coeff)) return false;
    if (!a.terms[i].same_exponents(b.terms[i])) return false;
  }
  return true;
}

std::string mono_to_string(const Monomial& m,
                           const std::vector<std::string>& unames,
                           const std::vector<std::string>& ynames) {
  std::string s;
  if (!m.coeff.is_one()) s = fq_to_string(m.coeff);
  auto app = [&](const std::string& name, long long e) {
    if (e == 0) return;
    if (!s.empty()) s += " ";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (size_t i = 0; i < m.ue.size(); ++i) app(unames[i], m.ue[i]);
  for (size_t i = 0; i < m.ye.size(); ++i) app(ynames[i], m.ye[i]);
  if (s.empty()) s = "1";
  return s;
}

}  // namespace toricmcm
