#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace toricmcm;

namespace {

// substitution oracle: rewrite u^3 -> x y^2 z^3 and v^3 -> x^5 y z^6 directly
Monomial e3_substitute_u_powers(const ToricPresentation& pres, long long upow,
                                long long vpow) {
  Monomial m = pres.one();
  m.ue = {upow % 3, vpow % 3};
  m.ye = {0, 0, 0};
  long long cu = upow / 3, cv = vpow / 3;
  m.ye[0] += cu * 1 + cv * 5;
  m.ye[1] += cu * 2 + cv * 1;
  m.ye[2] += cu * 3 + cv * 6;
  return m;
}

}  // namespace

TEST_CASE("buchberger completes the E3 relations with the known syzygy") {
  ToricPresentation pres = th::e3(7);
  // v x y^2 z^3 = u^2 x^2 y z^3 must be a consequence
  CHECK(pres.monomials_equal_in_R(th::m23(pres, 0, 1, 1, 2, 3),
                                  th::m23(pres, 2, 0, 2, 1, 3)));
  // and so must the second syzygy u x^5 y z^6 = v^2 x^2 y z^3
  CHECK(pres.monomials_equal_in_R(th::m23(pres, 1, 0, 5, 1, 6),
                                  th::m23(pres, 0, 2, 2, 1, 3)));
  // its second-order consequence: u x^4 y^2 z^6 = v^2 x y^2 z^3
  CHECK(pres.monomials_equal_in_R(th::m23(pres, 1, 0, 4, 2, 6),
                                  th::m23(pres, 0, 2, 1, 2, 3)));
}

TEST_CASE("single quadratic relation is already confluent") {
  const FqField* F = FqField::get(5);
  Fq one{F, 1};
  // u^2 - x y over one u-variable and two y-variables
  BinomialElement rel{Monomial{one, {2}, {0, 0}},
                      Monomial{-one, {0}, {1, 1}}};
  ToricPresentation pres(F, 2, 1, {rel});
  CHECK(pres.gb().size() == 1);
  CHECK(pres.gb()[0].lead.ue == Expo{2});
}

TEST_CASE("normal forms in the E3 ring") {
  ToricPresentation pres = th::e3(7);
  // generators reduce to zero
  Monomial g = th::m23(pres, 3, 0, 0, 0, 0);
  Monomial rhs = th::m23(pres, 0, 0, 1, 2, 3);
  CHECK(pres.monomials_equal_in_R(g, rhs));
  // u^7 -> u x^2 y^4 z^6 exactly (the printed value is already reduced)
  Monomial u7 = th::m23(pres, 7, 0, 0, 0, 0);
  Monomial u7nf = pres.normal_form(u7);
  CHECK(u7nf.same_exponents(th::m23(pres, 1, 0, 2, 4, 6)));
  CHECK(u7nf.coeff.is_one());
  // u^14: the substitution oracle gives u^2 x^4 y^8 z^12; the canonical
  // normal form rewrites further but stays R-equal to it
  Monomial u14 = th::m23(pres, 14, 0, 0, 0, 0);
  Monomial oracle = e3_substitute_u_powers(pres, 14, 0);
  CHECK(oracle.same_exponents(th::m23(pres, 2, 0, 4, 8, 12)));
  CHECK(pres.monomials_equal_in_R(u14, oracle));
  CHECK(pres.monomials_equal_in_R(pres.normal_form(u14), oracle));
  // normal form is idempotent
  Monomial nf = pres.normal_form(u14);
  CHECK(pres.normal_form(nf).same_exponents(nf));
}

TEST_CASE("monomial equality across the genfam syzygy") {
  ToricPresentation pres = th::genfam(11);
  CHECK(pres.monomials_equal_in_R(th::m23(pres, 1, 0, 5, 10, 9),
                                  th::m23(pres, 0, 3, 3, 8, 10)));
  Monomial m = th::m23(pres, 1, 1, 2, 2, 2);
  CHECK(pres.monomials_equal_in_R(m, m));
}

TEST_CASE("standard monomials") {
  ToricPresentation e3 = th::e3(7);
  // complement-of-staircase oracle: leading u-monomials are u^3, uv, v^3
  std::vector<Expo> expected;
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b) {
      bool excluded = (a >= 3) || (b >= 3) || (a >= 1 && b >= 1);
      if (!excluded) expected.push_back(Expo{a, b});
    }
  auto got = e3.standard_monomials().monos;
  CHECK(got.size() == 5);
  for (const auto& e : expected)
    CHECK(std::find(got.begin(), got.end(), e) != got.end());

  ToricPresentation gf = th::genfam(11);
  const auto& basis = gf.standard_monomials().monos;
  // the nine monomials 1, u, v, uv, v^2, uv^2, v^3, v^4, v^5 in this order
  std::vector<Expo> printed = {th::ue(0, 0), th::ue(1, 0), th::ue(0, 1),
                               th::ue(1, 1), th::ue(0, 2), th::ue(1, 2),
                               th::ue(0, 3), th::ue(0, 4), th::ue(0, 5)};
  CHECK(basis == printed);

  // no relations, no u-variables: the basis is {1}
  ToricPresentation regular(FqField::get(5), 1, 0, {});
  CHECK(regular.standard_monomials().monos == std::vector<Expo>{Expo{}});

  // infinite fiber: a single relation that bounds no u-power
  const FqField* F = FqField::get(5);
  Fq one{F, 1};
  BinomialElement rel{Monomial{one, {1, 1}, {0}}, Monomial{-one, {0, 0}, {1}}};
  ToricPresentation bad(F, 1, 2, {rel});
  CHECK_THROWS_AS(bad.standard_monomials(), InfiniteBasisError);
}

TEST_CASE("closed under divisibility") {
  for (auto* pres : {new ToricPresentation(th::e3(7)),
                     new ToricPresentation(th::genfam(11))}) {
    const auto& sb = pres->standard_monomials().monos;
    for (const auto& m : sb)
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        Expo div = m;
        div[i] -= 1;
        CHECK(std::find(sb.begin(), sb.end(), div) != sb.end());
      }
    delete pres;
  }
}

TEST_CASE("artinian lengths") {
  ToricPresentation gf = th::genfam(11);
  std::vector<Monomial> yvars;
  for (int i = 0; i < 3; ++i) {
    Monomial m = gf.one();
    m.ye[i] = 1;
    yvars.push_back(m);
  }
  CHECK(gf.length_artinian(yvars) == 9);

  ToricPresentation e3 = th::e3(7);
  std::vector<Monomial> yvars3;
  for (int i = 0; i < 3; ++i) {
    Monomial m = e3.one();
    m.ye[i] = 1;
    yvars3.push_back(m);
  }
  CHECK(e3.length_artinian(yvars3) == 5);

  // no relations, no u-variables, kill all y-variables: length 1
  ToricPresentation triv(FqField::get(5), 2, 0, {});
  std::vector<Monomial> kill;
  for (int i = 0; i < 2; ++i) {
    Monomial m = triv.one();
    m.ye[i] = 1;
    kill.push_back(m);
  }
  CHECK(triv.length_artinian(kill) == 1);

  CHECK_THROWS_AS(e3.length_artinian({}), NotArtinianError);
}

TEST_CASE("groebner output does not depend on relation order") {
  RingDefinitionFile def = preset("e3");
  ToricPresentation a = to_presentation(def, 7, 1);
  auto rels = a.relations();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(rels.begin(), rels.end(), rng);
    ToricPresentation b(a.field(), a.d(), a.n(), rels);
    REQUIRE(b.gb().size() == a.gb().size());
    for (size_t i = 0; i < a.gb().size(); ++i) {
      CHECK(a.gb()[i].lead.same_exponents(b.gb()[i].lead));
      CHECK(a.gb()[i].tail.has_value() == b.gb()[i].tail.has_value());
      if (a.gb()[i].tail)
        CHECK(a.gb()[i].tail->same_exponents(*b.gb()[i].tail));
    }
  }
}

TEST_CASE("bounded syzygy search") {
  // T_{1,2,2} with all scalars 1: relations u1^2 - y^2, u1 u2 - y^2,
  // u2^2 - y^2; the generators u1, u2 satisfy y^2 u2 = y^2 u1
  const FqField* F = FqField::get(5);
  Fq one{F, 1};
  std::vector<BinomialElement> rels;
  rels.push_back({Monomial{one, {2, 0}, {0}}, Monomial{-one, {0, 0}, {2}}});
  rels.push_back({Monomial{one, {1, 1}, {0}}, Monomial{-one, {0, 0}, {2}}});
  rels.push_back({Monomial{one, {0, 2}, {0}}, Monomial{-one, {0, 0}, {2}}});
  ToricPresentation pres(F, 1, 2, rels);
  std::vector<Monomial> gens = {pres.make_monomial(one, {1, 0}, {0}),
                                pres.make_monomial(one, {0, 1}, {0})};
  auto syz = pres.bounded_syzygy_search(gens, 4);
  REQUIRE(syz.size() >= 1);
  // the minimal relation involves y^2 on both generators
  bool found = false;
  for (const auto& s : syz) {
    if (s.size() == 2 && s[0].ymono == Expo{2} && s[1].ymono == Expo{2})
      found = true;
  }
  CHECK(found);

  // 1 is a nonzerodivisor: no relations on the single generator {1}
  ToricPresentation e3 = th::e3(7);
  auto none = e3.bounded_syzygy_search({e3.one()}, 8);
  CHECK(none.empty());

  CHECK(e3.bounded_syzygy_search({}, 8).empty());
}

TEST_CASE("bipartite multigrading: equal standard monomials satisfy the "
          "lattice condition") {
  ToricPresentation pres = th::e3(7);
  // c b y^alpha = c' b' y^beta in R forces the exponent difference into the
  // relation lattice; check it on the completed basis elements themselves
  for (const auto& g : pres.gb()) {
    if (!g.tail) continue;
    ZVec diff;
    for (int i = 0; i < pres.n(); ++i)
      diff.push_back(zz(g.lead.ue[i] - g.tail->ue[i]));
    for (int i = 0; i < pres.d(); ++i)
      diff.push_back(zz(g.lead.ye[i] - g.tail->ye[i]));
    CHECK(in_lattice(pres.relation_lattice(), diff));
  }
}
