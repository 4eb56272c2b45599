#include "toricmcm/arith.hpp"

#include "toricmcm/fq.hpp"

namespace toricmcm {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer multiplication overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer addition overflow");
  return r;
}

PrimePower::PrimePower(long long p, int e) : p(p), e(e) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  if (e < 1) throw ValidationError("exponent must be positive");
  q = 1;
  for (int i = 0; i < e; ++i) q = checked_mul(q, p);
  if (q < 2) throw ValidationError("q must be at least 2");
}

PrimePower PrimePower::from_q(long long q) {
  if (q < 2) throw ValidationError("q must be at least 2");
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower(q, 1);
  long long r = q;
  int e = 0;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw ValidationError("q is not a prime power");
  return PrimePower(p, e);
}

AdjustedRemainder adjusted_remainder(long long b, long long m) {
  if (b < 1 || m < 1)
    throw ValidationError("adjusted remainder needs b >= 1, m >= 1");
  long long r = b % m;
  if (r == 0) r = m;
  return {r, m};
}

DigitSplit split_digits(long long b, const PrimePower& q, long long m) {
  if (m < 1) throw ValidationError("modulus must be positive");
  if ((q.q - 1) % m != 0)
    throw ValidationError("q must be congruent to 1 mod m");
  if (b < 0 || b >= q.q) throw ValidationError("b must satisfy 0 <= b < q");
  long long scaled = checked_mul(b, (q.q - 1) / m);
  return {scaled / q.q, scaled % q.q, q.q};
}

long long qadic_trace(long long a, long long q) {
  if (a < 0 || q < 2) throw ValidationError("trace needs a >= 0, q >= 2");
  long long t = 0;
  while (a > 0) {
    t += a % q;
    a /= q;
  }
  return t;
}

}  // namespace toricmcm
