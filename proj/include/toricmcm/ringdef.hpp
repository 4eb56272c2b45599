#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricmcm/fintegral.hpp"
#include "toricmcm/frobenius.hpp"
#include "toricmcm/toric.hpp"

namespace toricmcm {

/// Line-oriented ring definition: a `ring` header (p, k, variable names)
/// followed by one of `relations` / `bipartite` / `family`, optionally a
/// `semigroup` block for the closure commands. See README for the grammar.
struct ParsedRelation {
  long long lhs_coeff = 1;
  std::vector<std::pair<std::string, long long>> lhs;  // (var, exponent)
  long long rhs_coeff = 1;
  std::vector<std::pair<std::string, long long>> rhs;
};

struct BipartiteSpec {
  std::vector<Expo> gamma;
  std::vector<std::vector<std::pair<long long, long long>>> phi;  // num/den
  std::vector<long long> chi;  // scalar values as prime-field integers
};

struct FamilySpec {
  long long m = 0;
  std::vector<Expo> alpha;
  std::vector<Expo> beta;
  std::vector<long long> a;
  std::vector<long long> b;
};

struct SemigroupSpec {
  int rank = 0;
  std::vector<Expo> gens;
};

struct RingDefinitionFile {
  long long p = 0;
  int k = 1;
  std::vector<std::string> ynames, unames;
  std::vector<ParsedRelation> relations;
  std::optional<BipartiteSpec> bipartite;
  std::optional<FamilySpec> family;
  std::optional<SemigroupSpec> semigroup;
};

RingDefinitionFile parse_ring(const std::string& text);
std::string serialize_ring(const RingDefinitionFile& def);

/// Built-in definitions; p may be overridden at materialization time.
RingDefinitionFile preset(const std::string& name);

/// Engine objects from a definition. Overrides replace the header field.
ToricPresentation to_presentation(const RingDefinitionFile& def,
                                  std::optional<long long> p_override = {},
                                  std::optional<int> k_override = {});
std::optional<BipartiteData> to_bipartite(const RingDefinitionFile& def,
                                          std::optional<long long> p_override = {},
                                          std::optional<int> k_override = {});
std::optional<FamilyTParams> to_family(const RingDefinitionFile& def,
                                       std::optional<long long> p_override = {},
                                       std::optional<int> k_override = {});

/// The semigroup a closure command operates on: an explicit `semigroup`
/// block when present, otherwise the image semigroup of the bipartite
/// parametrization.
AffineSemigroup to_semigroup(const RingDefinitionFile& def,
                             std::optional<long long> p_override = {});

/// Relation list over named variables (used by the chi command for ideals
/// over the ambient ring with no u-variables).
std::vector<BinomialElement> parse_ideal(const std::vector<std::string>& lines,
                                         const std::vector<std::string>& vars,
                                         const FqField* field);

}  // namespace toricmcm
