#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricmcm/fq.hpp"

namespace toricmcm {

using Expo = std::vector<long long>;

/// Term c * u^ue * y^ye over a split variable set (n u-variables adjoined to
/// d y-variables). Either block may be empty.
struct Monomial {
  Fq coeff;
  Expo ue;  // size n
  Expo ye;  // size d

  bool same_exponents(const Monomial& o) const {
    return ue == o.ue && ye == o.ye;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b assuming divisibility of exponents (checked).
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_pow(const Monomial& a, long long e);

/// lead - tail (tail absent for a pure monomial element). Normalized so the
/// lead coefficient is 1; the tail carries the scalar.
struct BinomialElement {
  Monomial lead;
  std::optional<Monomial> tail;
};

/// Global monomial orders. All compare the u-block before the y-block, so
/// leading terms of u-to-y rewriting rules sit on the u side and standard
/// monomial enumeration terminates in the u-variables.
///  - kULexYDegrevlex: pure lex on the u-exponents (u1 > u2 > ...), then
///    degrevlex on the y-block. Default.
///  - kUDegrevlexYDegrevlex: degrevlex on both blocks.
///  - kSaturating: positive weight vector first, then "cheapest variable"
///    tie-break used for binomial-ideal saturation by one variable.
struct MonomialOrder {
  enum Kind { kULexYDegrevlex, kUDegrevlexYDegrevlex, kSaturating };
  Kind kind = kULexYDegrevlex;
  // kSaturating data: weights over the combined (u|y) exponent vector and the
  // index (in combined coordinates) of the variable made cheapest.
  std::vector<long long> weights;
  int cheap_var = -1;

  /// -1, 0, 1 for a < b, a == b, a > b (exponents only).
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
};

/// Sparse polynomial as a sorted, collected term list (descending order).
struct Poly {
  std::vector<Monomial> terms;
  bool is_zero() const { return terms.empty(); }
};

Poly poly_from(const std::vector<Monomial>& terms, const MonomialOrder& ord);
Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b, const MonomialOrder& ord);
bool poly_equal(const Poly& a, const Poly& b);

std::string mono_to_string(const Monomial& m,
                           const std::vector<std::string>& unames,
                           const std::vector<std::string>& ynames);

}  // namespace toricmcm
