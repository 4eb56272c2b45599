#pragma once

#include <optional>
#include <vector>

#include "toricmcm/arith.hpp"
#include "toricmcm/monomial.hpp"
#include "toricmcm/zlin.hpp"

namespace toricmcm {

/// Finitely generated sub-semigroup of N^e. Membership is decided exactly:
/// when every axis has a pure generator multiple the non-axis generators
/// only need to be tried up to a small period, otherwise a bounded DFS runs.
class AffineSemigroup {
public:
  AffineSemigroup(int rank, std::vector<Expo> gens);

  int rank() const { return e_; }
  const std::vector<Expo>& gens() const { return gens_; }

  bool contains(const Expo& point) const;

  /// Canonical basis of the group hull grp(Gamma) inside Z^e.
  const ZMat& group_hull() const { return hull_; }

  /// [Z^e : grp(Gamma)] when the hull has full rank.
  ZZ hull_index() const;

  bool in_hull(const Expo& point) const;
  bool in_cone(const Expo& point) const;  // rational cone of the generators

private:
  bool dfs_member(Expo rest, size_t idx) const;

  int e_;
  std::vector<Expo> gens_;
  ZMat hull_;
  std::vector<long long> axis_;          // pure axis multiples (0 if missing)
  std::vector<int> free_gens_;           // indices of non-axis generators
  std::vector<long long> free_period_;   // try 0..period-1 copies of each
  bool fast_path_ = false;
  ZMat cone_facets_;  // inner normals; empty when the cone is not full-dim
};

struct ClosureResult {
  std::vector<Expo> gens;   // minimal new generators together with Gamma
  bool complete = true;     // false when the search bound was hit
  long long bound_used = 0;
};

/// Hilbert-basis style generating set of grp(Gamma) n cone(Gamma).
ClosureResult normalization(const AffineSemigroup& g);

/// Generators of { x in grp(Gamma) : q*x in Gamma }.
ClosureResult q_integral_closure(const AffineSemigroup& g, long long q,
                                 long long bound = 0);

struct FNormalization {
  ClosureResult closure;
  long long stable_q = 0;  // first q = p^e where the chain stabilizes
};

/// Iterates q-integral closures over q = p, p^2, ... until a fixpoint.
FNormalization f_normalization(const AffineSemigroup& g, long long p,
                               int max_steps = 8);

struct PowerIntegralResult {
  std::vector<Expo> gens;
  bool complete = true;
  long long multiple_bound = 0;  // exponents m tested per candidate
};

/// Monoid of fraction monomials x with m*x in Gamma for all large m, decided
/// by finding tested multiples with gcd 1.
PowerIntegralResult power_integral(const AffineSemigroup& g,
                                   long long bound = 0,
                                   long long multiple_bound = 30);

/// Lattice index [grp(Gamma) : grp(base)].
ZZ frac_degree(const AffineSemigroup& g, const AffineSemigroup& base);

/// True iff each generator of `sub` lies in `super` (semigroup containment
/// of the generated semigroups).
bool semigroup_subset(const std::vector<Expo>& sub_gens,
                      const AffineSemigroup& super);

}  // namespace toricmcm
