#pragma once

#include <cstdint>

#include "toricmcm/errors.hpp"

namespace toricmcm {

/// q = p^e with p prime, e >= 1.
struct PrimePower {
  long long p = 0;
  int e = 0;
  long long q = 0;

  PrimePower() = default;
  PrimePower(long long p, int e);

  /// Factors q as a prime power; rejects non-prime-powers.
  static PrimePower from_q(long long q);
};

/// Representative of b mod m in [1, m].
struct AdjustedRemainder {
  long long value = 0;  // epsilon, 1 <= epsilon <= m
  long long modulus = 0;
};

/// b written base q as b1*q + b0 with 0 <= b1, b0 < q.
struct DigitSplit {
  long long b1 = 0;
  long long b0 = 0;
  long long q = 0;
};

long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

AdjustedRemainder adjusted_remainder(long long b, long long m);

/// For q == 1 (mod m) and 0 <= b < q, splits b*(q-1)/m into q-adic digits.
/// The digits satisfy b1 + b0 < q and b0 = (q*eps - b)/m for b >= 1.
DigitSplit split_digits(long long b, const PrimePower& q, long long m);

/// Sum of base-q digits of a.
long long qadic_trace(long long a, long long q);

}  // namespace toricmcm
