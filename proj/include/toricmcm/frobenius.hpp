#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricmcm/arith.hpp"
#include "toricmcm/presentation.hpp"
#include "toricmcm/toric.hpp"

namespace toricmcm {

/// Element *(coeff * u^ubody * y^ydigits) of the pushforward of R along the
/// q-power endomorphism. The module action is r * (*a) = *(r^q a); canonical
/// form keeps the y-exponents below q and the u-part inside the standard
/// basis of R/(y)R.
struct StarElement {
  PrimePower q;
  Fq coeff;
  Expo ubody;
  Expo ydigits;
};

struct StarActionResult {
  Fq coeff;      // scalar pulled outside the star
  Expo yfactor;  // y-monomial pulled outside the star
  StarElement elem;
  bool zero = false;
};

/// r * x computed as *(r^q body), normal-formed and digit-split.
StarActionResult star_action(const Monomial& r, const StarElement& x,
                             const ToricPresentation& pres);

/// Relation b * e_j = c * y^s * e_k; the table is total over
/// standard-basis elements b and generator indices j.
struct TableRow {
  Expo b;  // u-exponent of the standard monomial acting
  int j = 0;
  Expo s;
  Fq c;
  int k = 0;
};

/// Witness that y^s * e_j lies in R * (*1): y^s e_j = c * (b-element) * e_0.
struct SaturationWitness {
  Expo s;
  Fq c;
  Expo b;  // u-exponent of the ring element acting on *1
};

struct SaturationModule {
  PrimePower q;
  std::vector<StarElement> generators;  // generators[0] is *1
  std::vector<TableRow> table;
  std::vector<SaturationWitness> witnesses;  // aligned with generators
};

/// Generators of the S-saturation of *1 inside the pushforward, collected
/// from the standard-basis actions on *1, merged up to association
/// (*A = c y^mu ⊛ *B), together with the full action table. Throws
/// ClosureFailureError when an action lands outside the collected span and
/// NotArtinianError when R/(y)R is infinite-dimensional.
SaturationModule saturation_generators(const ToricPresentation& pres,
                                       const PrimePower& q);

/// *A = c * y^mu ⊛ *B with mu allowed any sign (negative entries move the
/// monomial to the other side). Lattice analysis first, then verified by
/// normal forms; absent result means provably no such relation or none found.
struct StarAssociate {
  std::vector<long long> mu;
  Fq c;
};
std::optional<StarAssociate> star_associate(const ToricPresentation& pres,
                                            const PrimePower& q,
                                            const Monomial& A,
                                            const Monomial& B);

enum class PairStatus { kIndependent, kDependent, kUnknown };

struct PairReport {
  int j = 0, k = 0;
  PairStatus status = PairStatus::kUnknown;
  std::string detail;
};

enum class CertifyStatus { kCertified, kInconclusive, kRefuted };

/// Sound, incomplete freeness certification via the relation-lattice digit
/// analysis: a pair passes when no y-shift congruent to 0 mod q can relate
/// the two generator bodies. Certificates are only issued when every pair
/// passes; a verified dependency yields kRefuted, never a false certificate.
struct CertifyResult {
  CertifyStatus status = CertifyStatus::kInconclusive;
  int rank = 0;
  std::vector<PairReport> pairs;
  std::string reason;
};

CertifyResult certify_freeness(const SaturationModule& sm,
                               const ToricPresentation& pres,
                               long long degree_bound = 0);

struct FamilyPrediction {
  Expo ubody;
  Expo ydigits;
  bool matched_plain = false;     // R-equal to a computed generator body
  bool matched_associate = false; // same cyclic module as a computed one
  int matched_index = -1;
};

struct EimiReport {
  int i = 0;
  bool same_cyclic = false;
  bool plain_equal = false;
};

struct FamilyVerification {
  bool q_bound_ok = false;  // q > m * max exponent entry
  bool closed_form_agrees = true;
  std::vector<FamilyPrediction> predictions;
  std::vector<EimiReport> eimi;
  SaturationModule sm;
};

/// Checks the closed-form generator predictions for a family instance
/// against the computed saturation, plus the cross identities between
/// u-power and v-power generators.
FamilyVerification verify_family_theorem(const FamilyTParams& params,
                                         const PrimePower& q);

/// True iff every prime generator kills every module generator:
/// normal_form(g^q * body) == 0 for all pairs.
bool annihilator_check(const SaturationModule& sm,
                       const std::vector<BinomialElement>& prime_gens,
                       const ToricPresentation& pres);

struct Smallness {
  long long min_generators = 0;
  long long pardeg_bound = 0;
  bool very_small = false;
};

/// Requires a certificate (FreenessRequiredError otherwise).
Smallness multiplicity_and_smallness(const SaturationModule& sm,
                                     const CertifyResult& cert,
                                     const ToricPresentation& pres);

/// Smallest q = p^e with q == 1 (mod m) and q > m*N.
PrimePower suggest_q(long long p, long long m, long long N);

}  // namespace toricmcm
