#include "doctest.h"
#include "toricmcm/zlin.hpp"

#include "toricmcm/errors.hpp"

using namespace toricmcm;

namespace {

ZMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  ZMat m;
  for (auto& r : rows) {
    ZVec v;
    for (auto x : r) v.push_back(ZZ(x));
    m.push_back(v);
  }
  return m;
}

ZVec vec(std::initializer_list<long> xs) {
  ZVec v;
  for (auto x : xs) v.push_back(ZZ(x));
  return v;
}

}  // namespace

TEST_CASE("hnf and lattice index") {
  // gcd-of-minors oracle gives index 3 for this lattice in Z^2
  ZMat rows = mat({{3, 0}, {0, 3}, {1, 2}});
  ZMat h = hnf_rows(rows);
  CHECK(h.size() == 2);
  CHECK(lattice_index_in_ambient(h) == 3);
  CHECK(in_lattice(h, vec({1, 2})));
  CHECK(in_lattice(h, vec({2, 1})));
  CHECK(!in_lattice(h, vec({1, 0})));
  CHECK(lattice_index_in_ambient(mat({{1, 0}, {0, 1}})) == 1);
}

TEST_CASE("integer solve and kernel") {
  ZMat A = mat({{2, 4, 6}, {1, 1, 1}});
  auto r = solve_integer(A, vec({2, 1}));
  REQUIRE(r.particular.has_value());
  const ZVec& x = *r.particular;
  CHECK(2 * x[0] + 4 * x[1] + 6 * x[2] == 2);
  CHECK(x[0] + x[1] + x[2] == 1);
  CHECK(r.kernel.size() == 1);
  const ZVec& kv = r.kernel[0];
  CHECK(2 * kv[0] + 4 * kv[1] + 6 * kv[2] == 0);
  CHECK(kv[0] + kv[1] + kv[2] == 0);

  auto none = solve_integer(mat({{2}}), vec({1}));
  CHECK(!none.particular.has_value());
}

TEST_CASE("kernel of the E3-style exponent matrix") {
  // columns u, v, x, y, z with rows the torus weights
  ZMat M = mat({{1, 5, 3, 0, 0}, {2, 1, 0, 3, 0}, {1, 2, 0, 0, 1}});
  ZMat K = integer_kernel(M);
  CHECK(K.size() == 2);
  for (const auto& k : K) {
    CHECK(k[0] + 5 * k[1] + 3 * k[2] == 0);
    CHECK(2 * k[0] + k[1] + 3 * k[3] == 0);
    CHECK(k[0] + 2 * k[1] + k[4] == 0);
  }
}

TEST_CASE("modular solve via smith form") {
  // 2x == 4 (mod 6): solutions 2 and 5
  auto r = solve_mod(mat({{2}}), vec({4}), ZZ(6));
  REQUIRE(r.particular.has_value());
  CHECK(((*r.particular)[0] * 2 - 4) % 6 == 0);
  // x + y == 1, x - y == 0 (mod 5)
  auto r2 = solve_mod(mat({{1, 1}, {1, -1}}), vec({1, 0}), ZZ(5));
  REQUIRE(r2.particular.has_value());
  ZZ x = (*r2.particular)[0], y = (*r2.particular)[1];
  CHECK((x + y - 1) % 5 == 0);
  CHECK((x - y) % 5 == 0);
  // 2x == 1 (mod 4): no solution
  auto r3 = solve_mod(mat({{2}}), vec({1}), ZZ(4));
  CHECK(!r3.particular.has_value());
}

TEST_CASE("randomized solve_mod round trips") {
  uint64_t seed = 12345;
  auto rnd = [&]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return long((seed >> 33) % 19) - 9;
  };
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + int(trial % 3), n = 1 + int((trial / 3) % 3);
    ZZ M(long(2 + trial % 11));
    ZMat A(m, ZVec(n));
    ZVec x(n);
    for (auto& row : A)
      for (auto& v : row) v = ZZ(rnd());
    for (auto& v : x) v = ZZ(rnd());
    ZVec b(m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) b[i] += A[i][j] * x[j];
      mpz_mod(b[i].get_mpz_t(), b[i].get_mpz_t(), M.get_mpz_t());
    }
    auto r = solve_mod(A, b, M);
    REQUIRE(r.particular.has_value());
    for (int i = 0; i < m; ++i) {
      ZZ acc(0);
      for (int j = 0; j < n; ++j) acc += A[i][j] * (*r.particular)[j];
      CHECK((acc - b[i]) % M == 0);
    }
  }
}
