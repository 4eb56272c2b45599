#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricmcm/ringdef.hpp"

namespace toricmcm {

using Json = nlohmann::ordered_json;

struct DispatchFlags {
  std::optional<long long> q;
  std::optional<long long> p;
  std::optional<int> k;
  long long trunc = 0;  // 0: use 2 * max relation degree
  bool allow_any_scalar = false;
  bool timing = false;
  long long bound = 0;           // closure enumeration bound (0: default)
  long long multiple_bound = 30; // power-integral exponent search
  // chi command inputs
  std::vector<std::string> vars;
  std::vector<std::string> ideal_a, ideal_b;
  std::optional<long long> len_m, len_n, rank, fracdeg;
};

struct DispatchResult {
  Json report;
  int exit_code = 0;
};

uint64_t fnv1a64(const std::string& s);

/// Runs one command against a definition and produces the versioned JSON
/// report. Reports are byte-identical across runs for fixed inputs unless
/// timing is requested. Engine errors propagate as exceptions; see
/// error_report for the serialized form.
DispatchResult dispatch(const std::string& command,
                        const RingDefinitionFile& def,
                        const DispatchFlags& flags);

Json error_report(const std::string& command, const std::string& code,
                  const std::string& message);

}  // namespace toricmcm
