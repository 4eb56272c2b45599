#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricmcm/presentation.hpp"

namespace toricmcm {

using QQ = mpq_class;
using QMat = std::vector<std::vector<QQ>>;

/// Finitely generated full sub-semigroup of N^n given by a generator list.
/// Fullness here means: the generators span Q^n and every axis has a pure
/// positive multiple among the generators.
struct Semigroup {
  int n = 0;
  std::vector<Expo> gens;

  void validate() const;  // throws NotFullError
  /// Smallest pure multiple a_i of the i-th basis vector among the gens.
  std::vector<long long> axis_multiples() const;
};

/// n x d rational matrix inducing the semigroup morphism Gamma -> N^d.
struct PhiMatrix {
  QMat rows;  // n rows, d columns

  int n() const { return int(rows.size()); }
  int d() const { return rows.empty() ? 0 : int(rows[0].size()); }
  std::vector<QQ> apply(const Expo& gamma) const;
};

/// Scalar character values on the semigroup generators.
struct Character {
  std::vector<Fq> values;  // one per generator

  bool is_trivial() const;
};

struct BipartiteData {
  Semigroup gamma;
  PhiMatrix phi;
  Character chi;
  const FqField* field = nullptr;
  std::vector<std::string> ynames, unames;

  Character trivial_character() const;
};

struct IntegralityRow {
  Expo gamma;
  std::vector<QQ> image;
  bool integral = false;
};

/// Images of the generators under phi with non-integrality flags.
std::vector<IntegralityRow> check_integral(const PhiMatrix& A,
                                           const Semigroup& gamma);

/// Presentation with one relation u^gamma - chi(gamma) y^(gamma A) per
/// generator. Throws NotIntegralError / InconsistentCharacterError /
/// NotFullError.
ToricPresentation build_bipartite(const BipartiteData& data);

struct NoetherReport {
  bool finite = false;
  bool reduction = false;                // every row sum of A_phi exceeds 1
  std::vector<bool> norm_nondecreasing;  // |phi(gamma)| >= |gamma| per gen
};

NoetherReport check_noether_normalization(const BipartiteData& data);

/// Families of quadratic (m = 2, any n) and binomial (n = 2, m odd)
/// presentations; the constraint identities are validated exactly.
struct FamilyTParams {
  int d = 0, n = 0;
  long long m = 0;
  std::vector<Expo> alpha;              // n exponent tuples
  std::vector<std::vector<Expo>> beta;  // m=2: beta[i][j] for i<j; n=2: beta[0][0]
  std::vector<Fq> a;                    // n scalars
  std::vector<std::vector<Fq>> b;       // m=2: b[i][j] for i<j; n=2: b[0][0] = c
  const FqField* field = nullptr;
  std::vector<std::string> ynames, unames;
};

ToricPresentation build_family_T(const FamilyTParams& params);

/// Bipartite encoding (Gamma, phi, chi) of a family instance.
BipartiteData family_T_to_bipartite(const FamilyTParams& params);

bool is_tame(const PhiMatrix& A, long long p);

struct TrivializedCharacter {
  std::vector<Fq> h;  // substitution y_i -> h_i y_i recovers the input
  ToricPresentation presentation;  // purely toric (trivial character)
  const FqField* field;            // possibly an extension of the input field
};

/// Solves h^(phi(gamma)) = chi(gamma) by Smith-style elimination on discrete
/// logarithms over Z/(|kappa*|), extending the scalar field when needed.
/// Throws WildError when phi is not tame and NoSolutionInFieldError when no
/// solution exists within the attempted extensions.
TrivializedCharacter trivialize_character(const BipartiteData& data,
                                          int max_extension_factor = 6);

struct ParametrizationKernel {
  // monomial map: y_i -> t^(y_images[i]), u_j -> t^(u_images[j])
  std::vector<Expo> y_images;
  std::vector<Expo> u_images;
  std::vector<BinomialElement> generators;  // reduced basis of the kernel
  bool saturation_complete = true;
};

/// Kernel of the monomial parametrization attached to the bipartite data
/// (trivial character required), computed as a saturated lattice ideal.
ParametrizationKernel parametrization_kernel(const BipartiteData& data,
                                             int sweep_limit = 64);

}  // namespace toricmcm
