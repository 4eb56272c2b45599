#include "toricmcm/intersect.hpp"

#include "toricmcm/errors.hpp"

namespace toricmcm {

long long tensor_length(const std::vector<BinomialElement>& idealA,
                        const std::vector<BinomialElement>& idealB,
                        const FqField* field, int nvars) {
  std::vector<BinomialElement> rels = idealA;
  rels.insert(rels.end(), idealB.begin(), idealB.end());
  ToricPresentation pres(field, nvars, 0, rels);
  return pres.length_artinian({});
}

ChiResult chi_from_mcm_lengths(long long tensor_len, long long len_M_at_p,
                               long long len_N_at_q) {
  if (len_M_at_p <= 0 || len_N_at_q <= 0)
    throw ZeroDenominatorError("localization lengths must be positive");
  ChiResult r;
  r.value = mpq_class(long(tensor_len), long(len_M_at_p * len_N_at_q));
  r.value.canonicalize();
  r.integral = r.value.get_den() == 1;
  return r;
}

LocalizationLength localization_length_free_mcm(long long rank,
                                                long long frac_deg) {
  if (frac_deg <= 0)
    throw ZeroDenominatorError("fraction-field degree must be positive");
  LocalizationLength r;
  r.value = mpq_class(long(rank), long(frac_deg));
  r.value.canonicalize();
  r.integral = r.value.get_den() == 1;
  return r;
}

long long tor_vanishing_bound(long long pd_M, long long pd_N, long long d) {
  long long b = pd_M + pd_N - d;
  return b < 0 ? 0 : b;
}

}  // namespace toricmcm
