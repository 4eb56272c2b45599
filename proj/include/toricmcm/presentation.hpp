#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricmcm/monomial.hpp"
#include "toricmcm/zlin.hpp"

namespace toricmcm {

/// Reduced Groebner basis of an ideal generated by binomial/monomial
/// elements with scalar coefficients. S-polynomials of such elements are
/// again binomial or monomial, so the completion stays in this class.
/// Deterministic: the reduced basis is unique for a fixed order.
std::vector<BinomialElement> buchberger(std::vector<BinomialElement> gens,
                                        const MonomialOrder& ord);

/// Normal form of a monomial against a confluent basis. The result is a
/// single monomial (coefficient zero encodes reduction to 0).
Monomial nf_mono(Monomial m, const std::vector<BinomialElement>& gb,
                 const MonomialOrder& ord);

Poly nf_poly(const Poly& f, const std::vector<BinomialElement>& gb,
             const MonomialOrder& ord);

/// u-monomial basis of R/(y-variables)R, sorted by degree then lex.
struct StandardBasis {
  std::vector<Expo> monos;  // u-exponent vectors
};

struct SyzygyTerm {
  int gen = 0;  // generator index
  Expo ymono;   // y-monomial exponent
  Fq coeff;
};
using Syzygy = std::vector<SyzygyTerm>;

/// A local toric ring presented as kappa[y_1..y_d, u_1..u_n]/I with I
/// generated by binomials and monomials with scalar coefficients. The
/// Groebner cache is computed eagerly; instances are immutable afterwards
/// and safe for concurrent reads.
class ToricPresentation {
public:
  ToricPresentation(const FqField* F, int d, int n,
                    std::vector<BinomialElement> relations,
                    MonomialOrder ord = MonomialOrder{},
                    std::vector<std::string> ynames = {},
                    std::vector<std::string> unames = {});

  const FqField* field() const { return F_; }
  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<BinomialElement>& relations() const { return relations_; }
  const std::vector<BinomialElement>& gb() const { return gb_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<std::string>& ynames() const { return ynames_; }
  const std::vector<std::string>& unames() const { return unames_; }

  Monomial make_monomial(Fq c, Expo ue, Expo ye) const;
  Monomial one() const;

  Monomial normal_form(const Monomial& m) const;
  Poly normal_form(const Poly& f) const;

  /// True iff m1 - m2 lies in the ideal.
  bool monomials_equal_in_R(const Monomial& m1, const Monomial& m2) const;

  /// Throws InfiniteBasisError when R/(y)R is not Artinian.
  const StandardBasis& standard_monomials() const;

  /// kappa-dimension of the quotient by the relations plus `extra`
  /// monomial generators, counted over all variables.
  long long length_artinian(const std::vector<Monomial>& extra) const;

  /// All kappa[y]-linear relations among the images of `gens` in R with
  /// y-coefficient monomials of total degree <= bound and exponents
  /// restricted to multiples of `step`. Exhaustive linear algebra on the
  /// normal-form span; independent of the saturation machinery.
  std::vector<Syzygy> bounded_syzygy_search(const std::vector<Monomial>& gens,
                                            long long bound,
                                            long long step = 1) const;

  /// Lattice spanned by lead-tail exponent differences of the relations,
  /// rows over the combined (u|y) exponent space.
  const ZMat& relation_lattice() const;

  /// Solve for the set of y-shifts w making exponent(A) - exponent(B) - (0|w)
  /// a lattice element: returns (w0, basis of the y-shift lattice) or
  /// nothing when the u-parts cannot be matched.
  std::optional<std::pair<ZVec, ZMat>> solve_y_shift(const Monomial& A,
                                                     const Monomial& B) const;

  std::string to_string(const Monomial& m) const;

private:
  const FqField* F_;
  int d_, n_;
  std::vector<BinomialElement> relations_;
  MonomialOrder ord_;
  std::vector<std::string> ynames_, unames_;
  std::vector<BinomialElement> gb_;
  ZMat lattice_;
  // standard basis computed eagerly; absence means not Artinian mod (y)
  std::optional<StandardBasis> std_basis_;
  std::string std_basis_error_;
};

/// All exponent vectors over (n u-vars, d y-vars) of exact total degree N.
std::vector<std::pair<Expo, Expo>> exponents_of_degree(int n, int d,
                                                       long long N);

}  // namespace toricmcm
