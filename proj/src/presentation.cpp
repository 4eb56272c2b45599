#include "toricmcm/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "toricmcm/errors.hpp"

namespace toricmcm {

namespace {

// canonical element form: lead monic, lead > tail, drops to monomial when the
// two exponent vectors collide; empty optional result means the element is 0
std::optional<BinomialElement> normalize_element(Monomial a,
                                                 std::optional<Monomial> b,
                                                 const MonomialOrder& ord) {
  if (a.coeff.is_zero()) {
    if (!b || b->coeff.is_zero()) return std::nullopt;
    a = *b;
    b.reset();
  } else if (b && b->coeff.is_zero()) {
    b.reset();
  }
  if (b && a.same_exponents(*b)) {
    a.coeff = a.coeff + b->coeff;
    b.reset();
    if (a.coeff.is_zero()) return std::nullopt;
  }
  if (b && ord.compare(a, *b) < 0) std::swap(a, *b);
  // make monic
  if (!a.coeff.is_one()) {
    Fq inv = fq_inv(a.coeff);
    a.coeff = {a.coeff.F, a.coeff.F->one()};
    if (b) b->coeff = b->coeff * inv;
  }
  BinomialElement e;
  e.lead = a;
  e.tail = b;
  return e;
}

bool element_equal(const BinomialElement& a, const BinomialElement& b) {
  if (!a.lead.same_exponents(b.lead) || !(a.lead.coeff == b.lead.coeff))
    return false;
  if (a.tail.has_value() != b.tail.has_value()) return false;
  if (a.tail && (!a.tail->same_exponents(*b.tail) ||
                 !(a.tail->coeff == b.tail->coeff)))
    return false;
  return true;
}

}  // namespace

Monomial nf_mono(Monomial m, const std::vector<BinomialElement>& gb,
                 const MonomialOrder& ord) {
  if (m.coeff.is_zero()) return m;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const auto& g : gb) {
      if (mono_divides(g.lead, m)) {
        if (!g.tail) {
          m.coeff = {m.coeff.F, m.coeff.F->zero()};
          return m;
        }
        // the element is lead + tail, so lead rewrites to minus the tail
        Monomial cof = mono_div(m, g.lead);
        m = mono_mul(cof, *g.tail);
        m.coeff = -m.coeff;
        reduced = true;
        break;
      }
    }
  }
  (void)ord;
  return m;
}

Poly nf_poly(const Poly& f, const std::vector<BinomialElement>& gb,
             const MonomialOrder& ord) {
  std::vector<Monomial> out;
  out.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    Monomial r = nf_mono(t, gb, ord);
    if (!r.coeff.is_zero()) out.push_back(r);
  }
  return poly_from(out, ord);
}

std::vector<BinomialElement> buchberger(std::vector<BinomialElement> gens,
                                        const MonomialOrder& ord) {
  std::vector<BinomialElement> basis;
  for (auto& g : gens) {
    auto e = normalize_element(g.lead, g.tail, ord);
    if (e) basis.push_back(*e);
  }

  auto lcm_of = [](const Monomial& a, const Monomial& b) {
    Monomial l = a;
    l.coeff = {a.coeff.F, a.coeff.F->one()};
    for (size_t i = 0; i < l.ue.size(); ++i)
      l.ue[i] = std::max(a.ue[i], b.ue[i]);
    for (size_t i = 0; i < l.ye.size(); ++i)
      l.ye[i] = std::max(a.ye[i], b.ye[i]);
    return l;
  };

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (!basis[i].tail && !basis[j].tail) continue;  // S-poly vanishes
      queue.push_back({i, j, lcm_of(basis[i].lead, basis[j].lead)});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    // normal strategy: smallest lcm first; ties by indices for determinism
    size_t best = 0;
    for (size_t k = 1; k < queue.size(); ++k) {
      int c = ord.compare(queue[k].lcm, queue[best].lcm);
      if (c < 0 || (c == 0 && std::tie(queue[k].i, queue[k].j) <
                                  std::tie(queue[best].i, queue[best].j)))
        best = k;
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + best);

    const BinomialElement& f = basis[pr.i];
    const BinomialElement& g = basis[pr.j];
    // product criterion
    bool coprime = true;
    for (size_t t = 0; t < f.lead.ue.size() && coprime; ++t)
      if (f.lead.ue[t] > 0 && g.lead.ue[t] > 0) coprime = false;
    for (size_t t = 0; t < f.lead.ye.size() && coprime; ++t)
      if (f.lead.ye[t] > 0 && g.lead.ye[t] > 0) coprime = false;
    if (coprime && f.tail && g.tail) continue;

    Monomial cf = mono_div(pr.lcm, f.lead);
    Monomial cg = mono_div(pr.lcm, g.lead);
    // S = cf*f - cg*g; lead terms cancel
    Monomial s1, s2;
    bool has1 = false, has2 = false;
    if (f.tail) {
      s1 = mono_mul(cf, *f.tail);
      has1 = true;
    }
    if (g.tail) {
      s2 = mono_mul(cg, *g.tail);
      s2.coeff = -s2.coeff;
      has2 = true;
    }
    // reduce both monomials fully
    if (has1) s1 = nf_mono(s1, basis, ord);
    if (has2) s2 = nf_mono(s2, basis, ord);
    std::optional<BinomialElement> e;
    if (has1 && has2)
      e = normalize_element(s1, s2, ord);
    else if (has1)
      e = normalize_element(s1, std::nullopt, ord);
    else if (has2)
      e = normalize_element(s2, std::nullopt, ord);
    if (!e) continue;
    basis.push_back(*e);
    push_pairs(basis.size() - 1);
  }

  // interreduce: drop elements whose lead is divisible by another lead, then
  // reduce tails; repeat until stable
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<BinomialElement> next;
    for (size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        if (mono_divides(basis[j].lead, basis[i].lead)) {
          // keep the one with the smaller index when leads coincide
          if (basis[i].lead.same_exponents(basis[j].lead))
            redundant = j < i;
          else
            redundant = true;
        }
      }
      if (redundant) {
        changed = true;
        continue;
      }
      next.push_back(basis[i]);
    }
    basis = next;
    for (auto& b : basis) {
      if (!b.tail) continue;
      Monomial t = nf_mono(*b.tail, basis, ord);
      if (!(t.coeff == b.tail->coeff) || !t.same_exponents(*b.tail)) {
        auto e = normalize_element(b.lead, t, ord);
        if (e && !element_equal(*e, b)) {
          b = *e;
          changed = true;
        } else if (!e) {
          b.tail.reset();  // cannot happen for a monic lead
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const BinomialElement& a, const BinomialElement& b) {
              return ord.compare(a.lead, b.lead) < 0;
            });
  return basis;
}

ToricPresentation::ToricPresentation(const FqField* F, int d, int n,
                                     std::vector<BinomialElement> relations,
                                     MonomialOrder ord,
                                     std::vector<std::string> ynames,
                                     std::vector<std::string> unames)
    : F_(F), d_(d), n_(n), relations_(std::move(relations)), ord_(ord),
      ynames_(std::move(ynames)), unames_(std::move(unames)) {
  if (ynames_.empty())
    for (int i = 0; i < d_; ++i) ynames_.push_back("y" + std::to_string(i + 1));
  if (unames_.empty())
    for (int i = 0; i < n_; ++i) unames_.push_back("u" + std::to_string(i + 1));
  for (const auto& r : relations_) {
    if (int(r.lead.ue.size()) != n_ || int(r.lead.ye.size()) != d_)
      throw ValidationError("relation exponent length mismatch");
  }
  gb_ = buchberger(relations_, ord_);
  // relation lattice from the input relations (every rewrite step shifts
  // exponents by one of these rows)
  for (const auto& r : relations_) {
    if (!r.tail) continue;
    ZVec row;
    for (int i = 0; i < n_; ++i) row.push_back(zz(r.lead.ue[i] - r.tail->ue[i]));
    for (int i = 0; i < d_; ++i) row.push_back(zz(r.lead.ye[i] - r.tail->ye[i]));
    lattice_.push_back(row);
  }

  // standard basis of R/(y)R, eagerly; failures recorded, thrown on access
  std::vector<BinomialElement> withy = relations_;
  for (int i = 0; i < d_; ++i) {
    Monomial yi = one();
    yi.ye[i] = 1;
    withy.push_back({yi, std::nullopt});
  }
  auto gby = buchberger(withy, ord_);
  std::vector<Expo> pure_u;
  for (const auto& g : gby) {
    bool yfree = true;
    for (auto e : g.lead.ye)
      if (e != 0) yfree = false;
    if (yfree && !g.tail) pure_u.push_back(g.lead.ue);
    if (yfree && g.tail) {
      // a y-free lead with a tail can only rewrite into y-monomials; for the
      // fiber count it acts like a monomial
      pure_u.push_back(g.lead.ue);
    }
  }
  std::vector<long long> cap(n_, -1);
  for (const auto& e : pure_u) {
    int support = 0, var = -1;
    for (int i = 0; i < n_; ++i)
      if (e[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (cap[var] < 0 || e[var] < cap[var])) cap[var] = e[var];
  }
  bool finite = true;
  for (int i = 0; i < n_; ++i)
    if (cap[i] < 0) finite = false;
  if (n_ == 0) finite = true;
  if (!finite) {
    std_basis_error_ = "R/(y)R is not Artinian: some u-variable has no pure "
                       "power in the leading ideal";
  } else {
    StandardBasis sb;
    std::vector<Expo> all;
    // plain nested enumeration of the finite staircase box
    std::vector<long long> idx(n_, 0);
    while (true) {
      Expo e = idx;
      bool excluded = false;
      for (const auto& l : pure_u) {
        bool div = true;
        for (int i = 0; i < n_; ++i)
          if (l[i] > e[i]) div = false;
        if (div) {
          excluded = true;
          break;
        }
      }
      if (!excluded) all.push_back(e);
      int pos = n_ - 1;
      while (pos >= 0) {
        if (++idx[pos] < std::max<long long>(cap[pos], 1)) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    std::sort(all.begin(), all.end(), [](const Expo& a, const Expo& b) {
      long long ta = 0, tb = 0;
      for (auto x : a) ta += x;
      for (auto x : b) tb += x;
      if (ta != tb) return ta < tb;
      return a > b;  // u1-heavier first within a degree
    });
    sb.monos = all;
    std_basis_ = sb;
  }
}

Monomial ToricPresentation::make_monomial(Fq c, Expo ue, Expo ye) const {
  if (int(ue.size()) != n_ || int(ye.size()) != d_)
    throw ValidationError("exponent length mismatch");
  return Monomial{c, std::move(ue), std::move(ye)};
}

Monomial ToricPresentation::one() const {
  return Monomial{Fq{F_, F_->one()}, Expo(n_, 0), Expo(d_, 0)};
}

Monomial ToricPresentation::normal_form(const Monomial& m) const {
  return nf_mono(m, gb_, ord_);
}

Poly ToricPresentation::normal_form(const Poly& f) const {
  return nf_poly(f, gb_, ord_);
}

bool ToricPresentation::monomials_equal_in_R(const Monomial& m1,
                                             const Monomial& m2) const {
  Monomial a = normal_form(m1), b = normal_form(m2);
  if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
  return a.coeff == b.coeff && a.same_exponents(b);
}

const StandardBasis& ToricPresentation::standard_monomials() const {
  if (!std_basis_) throw InfiniteBasisError(std_basis_error_);
  return *std_basis_;
}

long long ToricPresentation::length_artinian(
    const std::vector<Monomial>& extra) const {
  std::vector<BinomialElement> gens = relations_;
  for (const auto& m : extra) gens.push_back({m, std::nullopt});
  auto gb = buchberger(gens, ord_);
  // caps per variable over the combined space
  int vars = n_ + d_;
  std::vector<long long> cap(vars, -1);
  std::vector<std::pair<Expo, Expo>> leads;
  for (const auto& g : gb) {
    leads.push_back({g.lead.ue, g.lead.ye});
    int support = 0, var = -1;
    for (int i = 0; i < n_; ++i)
      if (g.lead.ue[i] > 0) {
        ++support;
        var = i;
      }
    for (int i = 0; i < d_; ++i)
      if (g.lead.ye[i] > 0) {
        ++support;
        var = n_ + i;
      }
    if (support == 1) {
      long long e = var < n_ ? g.lead.ue[var] : g.lead.ye[var - n_];
      if (cap[var] < 0 || e < cap[var]) cap[var] = e;
    }
  }
  for (int i = 0; i < vars; ++i)
    if (cap[i] < 0)
      throw NotArtinianError("quotient is not Artinian: variable " +
                             std::to_string(i) + " has no pure power");
  long long count = 0;
  std::vector<long long> idx(vars, 0);
  if (vars == 0) return 1;
  while (true) {
    bool excluded = false;
    for (const auto& l : leads) {
      bool div = true;
      for (int i = 0; i < n_ && div; ++i)
        if (l.first[i] > idx[i]) div = false;
      for (int i = 0; i < d_ && div; ++i)
        if (l.second[i] > idx[n_ + i]) div = false;
      if (div) {
        // monomial leads exclude; binomial leads rewrite within the box, so
        // they exclude from the standard set as well
        excluded = true;
        break;
      }
    }
    if (!excluded) ++count;
    int pos = vars - 1;
    while (pos >= 0) {
      if (++idx[pos] < cap[pos]) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

std::vector<Syzygy> ToricPresentation::bounded_syzygy_search(
    const std::vector<Monomial>& gens, long long bound,
    long long step) const {
  std::vector<Syzygy> out;
  if (gens.empty()) return out;
  // columns: (gen, mu) with |mu| <= bound, entries multiples of step
  struct Col {
    int gen;
    Expo mu;
  };
  std::vector<Col> cols;
  std::vector<Expo> mus;
  Expo mu(d_, 0);
  // enumerate step-multiples with total degree <= bound
  std::vector<long long> idx(d_, 0);
  while (true) {
    Expo e(d_, 0);
    long long tot = 0;
    for (int i = 0; i < d_; ++i) {
      e[i] = idx[i] * step;
      tot += e[i];
    }
    if (tot <= bound) mus.push_back(e);
    int pos = d_ - 1;
    while (pos >= 0) {
      ++idx[pos];
      long long t2 = 0;
      for (int i = 0; i < d_; ++i) t2 += idx[i] * step;
      if (t2 <= bound) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(mus.begin(), mus.end());
  for (int g = 0; g < int(gens.size()); ++g)
    for (const auto& m : mus) cols.push_back({g, m});
  // rows: support monomials of the normal forms
  std::map<std::pair<Expo, Expo>, int> rowidx;
  std::vector<std::vector<std::pair<int, Fq>>> colvals(cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    Monomial m = gens[cols[c].gen];
    for (int i = 0; i < d_; ++i) m.ye[i] += cols[c].mu[i];
    Monomial r = normal_form(m);
    if (r.coeff.is_zero()) continue;
    auto key = std::make_pair(r.ue, r.ye);
    auto it = rowidx.find(key);
    if (it == rowidx.end())
      it = rowidx.emplace(key, int(rowidx.size())).first;
    colvals[c].push_back({it->second, r.coeff});
  }
  size_t nrows = rowidx.size(), ncols = cols.size();
  // dense elimination over the scalar field
  std::vector<std::vector<Fq>> M(nrows, std::vector<Fq>(ncols, Fq{F_, 0}));
  for (size_t c = 0; c < ncols; ++c)
    for (auto& [r, v] : colvals[c]) M[r][c] = v;
  // kernel via column reduction: track transformations on identity
  std::vector<std::vector<Fq>> T(ncols, std::vector<Fq>(ncols, Fq{F_, 0}));
  for (size_t i = 0; i < ncols; ++i) T[i][i] = Fq{F_, F_->one()};
  std::vector<bool> used(ncols, false);
  for (size_t r = 0; r < nrows; ++r) {
    size_t piv = ncols;
    for (size_t c = 0; c < ncols; ++c)
      if (!used[c] && !M[r][c].is_zero()) {
        piv = c;
        break;
      }
    if (piv == ncols) continue;
    used[piv] = true;
    Fq inv = fq_inv(M[r][piv]);
    for (size_t c = 0; c < ncols; ++c) {
      if (c == piv || M[r][c].is_zero()) continue;
      Fq f = M[r][c] * inv;
      for (size_t rr = 0; rr < nrows; ++rr)
        M[rr][c] = M[rr][c] - f * M[rr][piv];
      for (size_t rr = 0; rr < ncols; ++rr)
        T[rr][c] = T[rr][c] - f * T[rr][piv];
    }
  }
  for (size_t c = 0; c < ncols; ++c) {
    if (used[c]) continue;
    bool zero = true;
    for (size_t r = 0; r < nrows && zero; ++r)
      if (!M[r][c].is_zero()) zero = false;
    if (!zero) continue;
    Syzygy s;
    for (size_t r = 0; r < ncols; ++r) {
      if (T[r][c].is_zero()) continue;
      s.push_back({cols[r].gen, cols[r].mu, T[r][c]});
    }
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

const ZMat& ToricPresentation::relation_lattice() const { return lattice_; }

std::optional<std::pair<ZVec, ZMat>> ToricPresentation::solve_y_shift(
    const Monomial& A, const Monomial& B) const {
  // Find all w in Z^d with exp(A) - exp(B) - (0|w) in the relation lattice.
  // Parametrize lattice elements by coefficients x over the lattice rows and
  // solve the u-part equation; project the solution set to y-parts.
  size_t rows = lattice_.size();
  ZMat Au(n_, ZVec(rows, 0));
  for (size_t r = 0; r < rows; ++r)
    for (int i = 0; i < n_; ++i) Au[i][r] = lattice_[r][i];
  ZVec du(n_);
  for (int i = 0; i < n_; ++i) du[i] = zz(A.ue[i] - B.ue[i]);
  auto sol = solve_integer(Au, du);
  if (!sol.particular) return std::nullopt;
  auto ypart = [&](const ZVec& coeffs) {
    ZVec w(d_, 0);
    for (size_t r = 0; r < rows; ++r)
      for (int i = 0; i < d_; ++i) w[i] += coeffs[r] * lattice_[r][n_ + i];
    return w;
  };
  ZVec l0y = ypart(*sol.particular);
  ZVec w0(d_);
  for (int i = 0; i < d_; ++i) w0[i] = zz(A.ye[i] - B.ye[i]) - l0y[i];
  ZMat Ly;
  for (const auto& k : sol.kernel) {
    ZVec w = ypart(k);
    bool nonzero = false;
    for (auto& x : w)
      if (x != 0) nonzero = true;
    if (nonzero) Ly.push_back(w);
  }
  Ly = hnf_rows(Ly);
  return std::make_pair(w0, Ly);
}

std::string ToricPresentation::to_string(const Monomial& m) const {
  return mono_to_string(m, unames_, ynames_);
}

std::vector<std::pair<Expo, Expo>> exponents_of_degree(int n, int d,
                                                       long long N) {
  std::vector<std::pair<Expo, Expo>> out;
  int vars = n + d;
  if (vars == 0) return out;
  Expo cur(vars, 0);
  // compositions of N into vars parts
  std::function<void(int, long long)> rec = [&](int pos, long long rem) {
    if (pos == vars - 1) {
      cur[pos] = rem;
      Expo ue(cur.begin(), cur.begin() + n);
      Expo ye(cur.begin() + n, cur.end());
      out.push_back({ue, ye});
      return;
    }
    for (long long v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, N);
  return out;
}

}  // namespace toricmcm
