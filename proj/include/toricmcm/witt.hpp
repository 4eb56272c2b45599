#pragma once

#include <string>
#include <vector>

#include "toricmcm/presentation.hpp"

namespace toricmcm {

/// R/(n^N) for n the ideal of all variables: a finite-dimensional algebra
/// with monomial arithmetic, the computable window for Witt-vector checks.
class ArtinianQuotient {
public:
  ArtinianQuotient(const ToricPresentation& pres, long long truncation);

  const ToricPresentation& presentation() const { return *pres_; }
  long long truncation() const { return trunc_; }

  Poly reduce(const Poly& f) const;
  Poly zero() const { return Poly{}; }
  Poly one() const;
  Poly variable(int combined_index) const;  // u-vars first, then y-vars
  Poly from_int(long long a) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly pow(const Poly& a, long long e) const;
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  bool equal(const Poly& a, const Poly& b) const;
  long long p() const { return pres_->field()->p(); }
  using Elem = Poly;

private:
  const ToricPresentation* pres_;
  long long trunc_;
  std::vector<BinomialElement> gb_;  // relations + truncation monomials
};

/// Z/p^2, the ghost-map oracle coefficient ring.
struct Zp2Ring {
  long long pp = 0;
  long long mod = 0;  // p^2

  explicit Zp2Ring(long long p) : pp(p), mod(p * p) {}
  using Elem = long long;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long a) const {
    long long r = a % mod;
    return r < 0 ? r + mod : r;
  }
  Elem add(Elem a, Elem b) const { return (a + b) % mod; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % mod + mod) % mod; }
  Elem mul(Elem a, Elem b) const { return (a * b) % mod; }
  Elem neg(Elem a) const { return (mod - a) % mod; }
  Elem pow(Elem a, long long e) const {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  long long p() const { return pp; }
};

/// Length-2 p-typical Witt vector over a coefficient ring R.
template <class R>
struct Witt2 {
  typename R::Elem a0, a1;
};

/// C(p,i)/p as an exact integer, 1 <= i <= p-1.
long long binom_over_p(long long p, long long i);

template <class R>
Witt2<R> witt2_zero(const R& ring) {
  return {ring.zero(), ring.zero()};
}

template <class R>
Witt2<R> witt2_teichmuller(const R& ring, const typename R::Elem& a) {
  return {a, ring.zero()};
}

/// (a0+b0, a1+b1 - sum_{0<i<p} (C(p,i)/p) a0^i b0^(p-i)); the universal
/// integral addition law specialized to length 2.
template <class R>
Witt2<R> witt2_add(const R& ring, const Witt2<R>& x, const Witt2<R>& y) {
  long long p = ring.p();
  typename R::Elem corr = ring.zero();
  for (long long i = 1; i < p; ++i) {
    typename R::Elem t = ring.mul(ring.pow(x.a0, i), ring.pow(y.a0, p - i));
    corr = ring.add(corr, ring.mul(ring.from_int(binom_over_p(p, i)), t));
  }
  return {ring.add(x.a0, y.a0), ring.sub(ring.add(x.a1, y.a1), corr)};
}

/// (a0 b0, a0^p b1 + a1 b0^p + p a1 b1); the p-multiple vanishes in
/// characteristic p but is kept for the ghost-map oracle over Z/p^2.
template <class R>
Witt2<R> witt2_mul(const R& ring, const Witt2<R>& x, const Witt2<R>& y) {
  long long p = ring.p();
  typename R::Elem t = ring.mul(ring.pow(x.a0, p), y.a1);
  t = ring.add(t, ring.mul(x.a1, ring.pow(y.a0, p)));
  t = ring.add(t, ring.mul(ring.from_int(p), ring.mul(x.a1, y.a1)));
  return {ring.mul(x.a0, y.a0), t};
}

template <class R>
Witt2<R> witt2_neg(const R& ring, const Witt2<R>& x) {
  long long p = ring.p();
  long long c = 0;  // sum (C(p,i)/p)(-1)^(p-i): 0 for odd p, -1 for p = 2
  for (long long i = 1; i < p; ++i)
    c += ((p - i) % 2 == 0 ? 1 : -1) * binom_over_p(p, i);
  typename R::Elem a1 = ring.neg(x.a1);
  a1 = ring.add(a1, ring.mul(ring.from_int(c), ring.pow(x.a0, p)));
  return {ring.neg(x.a0), a1};
}

template <class R>
Witt2<R> witt2_sub(const R& ring, const Witt2<R>& x, const Witt2<R>& y) {
  return witt2_add(ring, x, witt2_neg(ring, y));
}

/// Integer image n * (1, 0) under repeated Witt addition.
template <class R>
Witt2<R> witt2_from_int(const R& ring, long long n) {
  Witt2<R> one = witt2_teichmuller(ring, ring.one());
  Witt2<R> acc = witt2_zero(ring);
  bool negate = n < 0;
  if (negate) n = -n;
  for (long long i = 0; i < n; ++i) acc = witt2_add(ring, acc, one);
  return negate ? witt2_neg(ring, acc) : acc;
}

/// Ghost components (a0, a0^p + p a1).
template <class R>
std::pair<typename R::Elem, typename R::Elem> witt2_ghost(const R& ring,
                                                          const Witt2<R>& x) {
  return {x.a0,
          ring.add(ring.pow(x.a0, ring.p()), ring.mul(ring.from_int(ring.p()),
                                                      x.a1))};
}

struct RelationWittCheck {
  std::string relation;
  bool pass = false;
};

struct WittCheckReport {
  long long truncation = 0;
  bool all_pass = false;
  std::vector<RelationWittCheck> relations;
};

/// Evaluates each defining relation under the Teichmuller lift of the
/// variables inside W_2(R/n^N) and checks that the Witt difference of the
/// two sides vanishes. Requires +-1 coefficients unless allow_any_scalar;
/// general scalars are evaluated through the integer image (prime field
/// only), which is what makes non-purely-toric inputs fail.
WittCheckReport witt_transform_check(const ToricPresentation& pres,
                                     long long truncation,
                                     bool allow_any_scalar = false);

}  // namespace toricmcm
