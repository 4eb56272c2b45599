#pragma once

#include <string>
#include <vector>

#include "toricmcm/frobenius.hpp"
#include "toricmcm/ringdef.hpp"
#include "toricmcm/toric.hpp"

namespace th {

using namespace toricmcm;

// u^3 = x y^2 z^3, v^3 = x^5 y z^6, u v = x^2 y z^3
inline ToricPresentation e3(long long p, int k = 1) {
  return to_presentation(preset("e3"), p, k);
}

// u^2 = x y^2 z^4, u v^3 = x^3 y^4 z^3, v^6 = x^5 y^6 z^2
inline ToricPresentation genfam(long long p, int k = 1) {
  return to_presentation(preset("genfam"), p, k);
}

inline BipartiteData e3_data(long long p, int k = 1) {
  return *to_bipartite(preset("e3"), p, k);
}

inline BipartiteData genfam_data(long long p, int k = 1) {
  return *to_bipartite(preset("genfam"), p, k);
}

// monomial c * u^a v^b * x^i y^j z^l over a (2 u-var, 3 y-var) presentation
inline Monomial m23(const ToricPresentation& pres, long long a, long long b,
                    long long i, long long j, long long l, long long c = 1) {
  return pres.make_monomial(Fq{pres.field(), pres.field()->from_int(c)},
                            Expo{a, b}, Expo{i, j, l});
}

inline Expo ue(long long a, long long b) { return Expo{a, b}; }
inline Expo ye(long long i, long long j, long long l) { return Expo{i, j, l}; }

// the reduced parametrization image of E3: x=(3,0,0), y=(0,3,0), z=(0,0,1),
// u=(1,2,1), v=(5,1,2)
inline AffineSemigroup e3_image() {
  return AffineSemigroup(
      3, {ye(3, 0, 0), ye(0, 3, 0), ye(0, 0, 1), ye(1, 2, 1), ye(5, 1, 2)});
}

inline bool has_generator_body(const SaturationModule& sm,
                               const ToricPresentation& pres,
                               const Monomial& body) {
  for (const auto& g : sm.generators) {
    Monomial gb = pres.make_monomial(g.coeff, g.ubody, g.ydigits);
    if (pres.monomials_equal_in_R(gb, body)) return true;
  }
  return false;
}

// find the row for standard monomial b acting on generator j
inline const TableRow* row_of(const SaturationModule& sm, const Expo& b,
                              int j = 0) {
  for (const auto& r : sm.table)
    if (r.b == b && r.j == j) return &r;
  return nullptr;
}

}  // namespace th
