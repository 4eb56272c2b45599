#pragma once

#include <gmpxx.h>

#include <vector>

#include "toricmcm/presentation.hpp"

namespace toricmcm {

/// kappa-dimension of ambient/(A + B) via standard monomials; both ideals
/// are given by binomial/monomial elements over the same ambient polynomial
/// ring (a presentation with zero u-variables).
long long tensor_length(const std::vector<BinomialElement>& idealA,
                        const std::vector<BinomialElement>& idealB,
                        const FqField* field, int nvars);

struct ChiResult {
  mpq_class value;
  bool integral = false;
};

/// chi = tensor_len / (len_M * len_N); exact rational with an integrality
/// flag.
ChiResult chi_from_mcm_lengths(long long tensor_len, long long len_M_at_p,
                               long long len_N_at_q);

struct LocalizationLength {
  mpq_class value;
  bool integral = false;
};

/// rank / frac_deg for a module free over the Noether normalization.
LocalizationLength localization_length_free_mcm(long long rank,
                                                long long frac_deg);

/// max(0, pd_M + pd_N - d).
long long tor_vanishing_bound(long long pd_M, long long pd_N, long long d);

}  // namespace toricmcm
