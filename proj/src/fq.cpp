#include "toricmcm/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace toricmcm {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<long> decode(uint64_t v, long p, int k) {
  std::vector<long> c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = long(v % uint64_t(p));
    v /= uint64_t(p);
  }
  return c;
}

uint64_t encode(const std::vector<long>& c, long p) {
  uint64_t v = 0;
  for (int i = int(c.size()) - 1; i >= 0; --i)
    v = v * uint64_t(p) + uint64_t(c[i]);
  return v;
}

// product of polynomials mod (modpoly, p); modpoly monic of degree k
std::vector<long> polymulmod(const std::vector<long>& a,
                             const std::vector<long>& b,
                             const std::vector<long>& mod, long p) {
  int k = int(mod.size()) - 1;
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = int(prod.size()) - 1; d >= k; --d) {
    long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) {
      prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

// irreducibility over F_p via x^(p^i) != x for i < k and x^(p^k) == x
bool is_irreducible(const std::vector<long>& mod, long p) {
  int k = int(mod.size()) - 1;
  std::vector<long> x(k, 0);
  if (k == 1) return true;
  x[1] = 1;
  std::vector<long> fr = x;
  for (int i = 1; i <= k; ++i) {
    // fr <- fr^p
    std::vector<long> acc(k, 0);
    acc[0] = 1;
    std::vector<long> base = fr;
    long long e = p;
    while (e > 0) {
      if (e & 1) acc = polymulmod(acc, base, mod, p);
      base = polymulmod(base, base, mod, p);
      e >>= 1;
    }
    fr = acc;
    if (i < k && fr == x) return false;
  }
  return fr == x;
}

}  // namespace

FqField::FqField(long p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw ValidationError("field characteristic must be prime");
  if (k < 1) throw ValidationError("field extension degree must be positive");
  size_ = 1;
  for (int i = 0; i < k; ++i) {
    if (size_ > (1L << 24) / p) throw ValidationError("field too large");
    size_ *= p;
  }
  // deterministic modulus: smallest irreducible monic polynomial of degree k
  mod_.assign(k + 1, 0);
  mod_[k] = 1;
  if (k > 1) {
    bool found = false;
    for (long low = 0; low < size_ && !found; ++low) {
      std::vector<long> cand = decode(uint64_t(low), p, k);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        mod_ = cand;
        found = true;
      }
    }
    if (!found) throw ValidationError("no irreducible modulus found");
  }
  // exp/log tables and a generator
  log_.assign(size_, -1);
  exp_.clear();
  for (uint64_t g = 1; g < uint64_t(size_); ++g) {
    std::vector<uint64_t> seen;
    uint64_t x = 1;
    bool ok = true;
    for (long i = 0; i < size_ - 1; ++i) {
      seen.push_back(x);
      x = mul_slow(x, g);
      if (x == 1 && i + 2 < size_) {
        ok = (i + 1 == size_ - 1);
        break;
      }
    }
    if (ok && x == 1) {
      gen_ = g;
      exp_ = seen;
      for (long i = 0; i < size_ - 1; ++i) log_[exp_[i]] = i;
      break;
    }
  }
  if (gen_ == 0 && size_ > 2) throw ValidationError("no generator found");
  if (size_ == 2) {
    gen_ = 1;
    exp_ = {1};
    log_[1] = 0;
  }
}

const FqField* FqField::get(long p, int k) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<FqField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::unique_ptr<FqField>(new FqField(p, k)))
             .first;
  }
  return it->second.get();
}

uint64_t FqField::from_int(long long a) const {
  long long r = a % p_;
  if (r < 0) r += p_;
  return uint64_t(r);
}

uint64_t FqField::add(uint64_t a, uint64_t b) const {
  if (k_ == 1) return (a + b) % uint64_t(p_);
  auto ca = decode(a, p_, k_), cb = decode(b, p_, k_);
  for (int i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca, p_);
}

uint64_t FqField::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t FqField::neg(uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : uint64_t(p_) - a;
  auto c = decode(a, p_, k_);
  for (int i = 0; i < k_; ++i) c[i] = (p_ - c[i]) % p_;
  return encode(c, p_);
}

uint64_t FqField::mul_slow(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return (a * b) % uint64_t(p_);
  return encode(polymulmod(decode(a, p_, k_), decode(b, p_, k_), mod_, p_), p_);
}

uint64_t FqField::mul(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  long la = log_[a], lb = log_[b];
  return exp_[(la + lb) % (size_ - 1)];
}

uint64_t FqField::inv(uint64_t a) const {
  if (a == 0) throw ZeroDenominatorError("inverse of zero field element");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

uint64_t FqField::pow(uint64_t a, long long e) const {
  if (a == 0) {
    if (e < 0) throw ZeroDenominatorError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long m = size_ - 1;
  long long le = ((e % m) + m) % m;
  return exp_[size_t((static_cast<long long>(log_[a]) * le) % m)];
}

long FqField::dlog(uint64_t a) const {
  if (a == 0) throw ZeroDenominatorError("dlog of zero");
  return log_[a];
}

Fq fq_inv(const Fq& a) { return {a.F, a.F->inv(a.v)}; }

Fq fq_pow(const Fq& a, long long e) { return {a.F, a.F->pow(a.v, e)}; }

Fq fq_qth_root(const Fq& a, long long q) {
  const FqField* F = a.F;
  long p = F->p();
  // q = p^e; the inverse of x -> x^q on F_{p^k} is x -> x^(p^((k - e) mod k))
  long long e = 0;
  long long qq = q;
  while (qq > 1) {
    if (qq % p != 0)
      throw ValidationError("q is not a power of the field characteristic");
    qq /= p;
    ++e;
  }
  int k = F->k();
  long long r = ((k - (e % k)) % k + k) % k;
  long long exp = 1;
  for (long long i = 0; i < r; ++i) exp *= p;
  return fq_pow(a, exp);
}

Fq fq_embed(const Fq& a, const FqField* big) {
  const FqField* small = a.F;
  if (small == big) return a;
  if (big->p() != small->p() || big->k() % small->k() != 0)
    throw BaseMismatchError("no embedding between these fields");
  // evaluate small's modulus at candidates in big; pick the smallest root
  const auto& mod = small->modulus();
  uint64_t root = 0;
  bool found = false;
  for (long cand = 0; cand < big->size(); ++cand) {
    uint64_t acc = 0, pw = 1;
    for (size_t i = 0; i < mod.size(); ++i) {
      acc = big->add(acc, big->mul(big->from_int(mod[i]), pw));
      pw = big->mul(pw, uint64_t(cand));
    }
    if (acc == 0) {
      root = uint64_t(cand);
      found = true;
      break;
    }
  }
  if (!found) throw BaseMismatchError("modulus has no root in target field");
  // map sum c_i t^i to sum c_i root^i
  uint64_t v = a.v, acc = 0, pw = 1;
  long p = small->p();
  for (int i = 0; i < small->k(); ++i) {
    long c = long(v % uint64_t(p));
    v /= uint64_t(p);
    acc = big->add(acc, big->mul(big->from_int(c), pw));
    pw = big->mul(pw, root);
  }
  return {big, acc};
}

std::string fq_to_string(const Fq& a) {
  if (a.F->k() == 1) return std::to_string(a.v);
  return std::to_string(a.v) + "@F" + std::to_string(a.F->size());
}

}  // namespace toricmcm
