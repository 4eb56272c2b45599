#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricmcm/errors.hpp"

namespace toricmcm {

bool is_prime(long long n);

/// Arithmetic context for the finite field with p^k elements. Elements are
/// encoded as integers in [0, p^k): the base-p digits are the coefficients of
/// the residue polynomial modulo a fixed irreducible monic polynomial of
/// degree k (for k = 1 the encoding is the residue itself). Instances are
/// interned and immutable; lookups are thread-safe.
class FqField {
public:
  static const FqField* get(long p, int k = 1);

  long p() const { return p_; }
  int k() const { return k_; }
  long size() const { return size_; }

  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }
  uint64_t from_int(long long a) const;

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t pow(uint64_t a, long long e) const;

  /// Multiplicative generator of the unit group.
  uint64_t generator() const { return gen_; }

  /// Discrete log base generator(); input must be nonzero.
  long dlog(uint64_t a) const;

  /// Modulus polynomial coefficients c_0..c_k (c_k = 1).
  const std::vector<long>& modulus() const { return mod_; }

private:
  FqField(long p, int k);
  uint64_t mul_slow(uint64_t a, uint64_t b) const;

  long p_;
  int k_;
  long size_;
  std::vector<long> mod_;
  uint64_t gen_ = 0;
  std::vector<long> log_;    // log_[v] for v != 0
  std::vector<uint64_t> exp_;
};

/// Value-semantic element of an interned FqField.
struct Fq {
  const FqField* F = nullptr;
  uint64_t v = 0;

  Fq() = default;
  Fq(const FqField* F, uint64_t v) : F(F), v(v) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.F == b.F && a.v == b.v;
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
};

inline void check_same_field(const Fq& a, const Fq& b) {
  if (a.F != b.F) throw BaseMismatchError("elements from different fields");
}

inline Fq operator+(const Fq& a, const Fq& b) {
  check_same_field(a, b);
  return {a.F, a.F->add(a.v, b.v)};
}
inline Fq operator-(const Fq& a, const Fq& b) {
  check_same_field(a, b);
  return {a.F, a.F->sub(a.v, b.v)};
}
inline Fq operator*(const Fq& a, const Fq& b) {
  check_same_field(a, b);
  return {a.F, a.F->mul(a.v, b.v)};
}
inline Fq operator-(const Fq& a) { return {a.F, a.F->neg(a.v)}; }

Fq fq_inv(const Fq& a);
Fq fq_pow(const Fq& a, long long e);

/// Unique q-th root for q = p^e a power of the field characteristic; the
/// Frobenius is bijective on a finite field, so this is total.
Fq fq_qth_root(const Fq& a, long long q);

/// Ring embedding of a into `big` (big must be F_{p^(k*m)}); computed by
/// sending the residue class of the small modulus to a root of that modulus
/// in the big field. Deterministic: smallest root by encoding is chosen.
Fq fq_embed(const Fq& a, const FqField* big);

std::string fq_to_string(const Fq& a);

}  // namespace toricmcm
