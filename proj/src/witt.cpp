#include "toricmcm/witt.hpp"

#include <gmpxx.h>

#include "toricmcm/errors.hpp"

namespace toricmcm {

long long binom_over_p(long long p, long long i) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(p),
               static_cast<unsigned long>(i));
  mpz_class pz(static_cast<long>(p));
  mpz_class q = c / pz;
  if (q * pz != c) throw ValidationError("binomial not divisible by p");
  if (!q.fits_slong_p()) throw OverflowError("witt coefficient overflow");
  return q.get_si();
}

ArtinianQuotient::ArtinianQuotient(const ToricPresentation& pres,
                                   long long truncation)
    : pres_(&pres), trunc_(truncation) {
  if (truncation < 1) throw ValidationError("truncation must be positive");
  std::vector<BinomialElement> gens = pres.relations();
  Fq one{pres.field(), pres.field()->one()};
  for (const auto& [ue, ye] : exponents_of_degree(pres.n(), pres.d(),
                                                  truncation)) {
    // pre-reduce the degree-N monomials against the relation basis to keep
    // the pair queue small
    Monomial m = nf_mono(Monomial{one, ue, ye}, pres.gb(), pres.order());
    if (m.coeff.is_zero()) continue;
    m.coeff = one;
    gens.push_back({m, std::nullopt});
  }
  gb_ = buchberger(gens, pres.order());
}

Poly ArtinianQuotient::reduce(const Poly& f) const {
  return nf_poly(f, gb_, pres_->order());
}

Poly ArtinianQuotient::one() const {
  return poly_from({pres_->one()}, pres_->order());
}

Poly ArtinianQuotient::variable(int combined_index) const {
  Monomial m = pres_->one();
  if (combined_index < pres_->n())
    m.ue[combined_index] = 1;
  else
    m.ye[combined_index - pres_->n()] = 1;
  return reduce(poly_from({m}, pres_->order()));
}

Poly ArtinianQuotient::from_int(long long a) const {
  Monomial m = pres_->one();
  m.coeff = Fq{pres_->field(), pres_->field()->from_int(a)};
  return poly_from({m}, pres_->order());
}

Poly ArtinianQuotient::add(const Poly& a, const Poly& b) const {
  return reduce(poly_add(a, b, pres_->order()));
}

Poly ArtinianQuotient::sub(const Poly& a, const Poly& b) const {
  return add(a, neg(b));
}

Poly ArtinianQuotient::mul(const Poly& a, const Poly& b) const {
  return reduce(poly_mul(a, b, pres_->order()));
}

Poly ArtinianQuotient::neg(const Poly& a) const { return poly_neg(a); }

Poly ArtinianQuotient::pow(const Poly& a, long long e) const {
  Poly r = one();
  Poly base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool ArtinianQuotient::equal(const Poly& a, const Poly& b) const {
  return poly_equal(a, b);
}

namespace {

Witt2<ArtinianQuotient> eval_monomial(const ArtinianQuotient& A,
                                      const Expo& ue, const Expo& ye) {
  // product of Teichmuller lifts of the variables; multiplicativity makes
  // this the lift of the monomial itself, but it is computed by genuine
  // Witt multiplication
  Witt2<ArtinianQuotient> acc = witt2_teichmuller(A, A.one());
  const ToricPresentation& pres = A.presentation();
  for (int i = 0; i < pres.n(); ++i)
    for (long long e = 0; e < ue[i]; ++e)
      acc = witt2_mul(A, acc, witt2_teichmuller(A, A.variable(i)));
  for (int i = 0; i < pres.d(); ++i)
    for (long long e = 0; e < ye[i]; ++e)
      acc = witt2_mul(A, acc,
                      witt2_teichmuller(A, A.variable(pres.n() + i)));
  return acc;
}

}  // namespace

WittCheckReport witt_transform_check(const ToricPresentation& pres,
                                     long long truncation,
                                     bool allow_any_scalar) {
  WittCheckReport rep;
  rep.truncation = truncation;
  const FqField* F = pres.field();
  for (const auto& r : pres.relations()) {
    if (!r.tail)
      throw NotPurelyToricError("monomial relations have no toric form");
    Fq c = -r.tail->coeff;  // relation is lead - c * tail-monomial
    bool unit_pm = c.is_one() || (-c).is_one();
    if (!unit_pm && !allow_any_scalar)
      throw NotPurelyToricError("relation coefficient is not +-1: " +
                                fq_to_string(c));
    if (!unit_pm && F->k() != 1)
      throw NotPurelyToricError(
          "general scalars are only evaluated over the prime field");
  }
  ArtinianQuotient A(pres, truncation);
  for (const auto& r : pres.relations()) {
    Fq c = -r.tail->coeff;
    long long cint;
    if (c.is_one()) {
      cint = 1;
    } else if ((-c).is_one()) {
      cint = -1;
    } else {
      cint = static_cast<long long>(c.v);  // prime-field residue
    }
    Witt2<ArtinianQuotient> wl = eval_monomial(A, r.lead.ue, r.lead.ye);
    Witt2<ArtinianQuotient> wt = eval_monomial(A, r.tail->ue, r.tail->ye);
    Witt2<ArtinianQuotient> rhs =
        witt2_mul(A, witt2_from_int(A, cint), wt);
    Witt2<ArtinianQuotient> diff = witt2_sub(A, wl, rhs);
    RelationWittCheck rc;
    rc.relation = pres.to_string(r.lead) + " = " +
                  pres.to_string(Monomial{c, r.tail->ue, r.tail->ye});
    rc.pass = A.is_zero(diff.a0) && A.is_zero(diff.a1);
    rep.relations.push_back(rc);
  }
  rep.all_pass = true;
  for (const auto& rc : rep.relations)
    if (!rc.pass) rep.all_pass = false;
  return rep;
}

}  // namespace toricmcm
