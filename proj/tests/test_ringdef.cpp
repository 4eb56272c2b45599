#include "doctest.h"
#include "helpers.hpp"

using namespace toricmcm;

TEST_CASE("presets materialize to the expected presentations") {
  RingDefinitionFile e3 = preset("e3");
  CHECK(e3.p == 7);
  ToricPresentation p7 = to_presentation(e3);
  CHECK(p7.relations().size() == 3);
  // p is overridable at materialization
  ToricPresentation p11 = to_presentation(e3, 11);
  CHECK(p11.field()->p() == 11);

  RingDefinitionFile gf = preset("genfam");
  CHECK(gf.p == 11);
  CHECK(to_presentation(gf).relations().size() == 3);
  CHECK_THROWS_AS(preset("nope"), ValidationError);
}

TEST_CASE("explicit relation lists parse to the same ring as the preset") {
  RingDefinitionFile def = parse_ring(
      "ring\n"
      "  p 11\n"
      "  k 1\n"
      "  yvars x y z\n"
      "  uvars u v\n"
      "relations\n"
      "  u^2 = x y^2 z^4\n"
      "  u v^3 = x^3 y^4 z^3\n"
      "  v^6 = x^5 y^6 z^2\n");
  ToricPresentation a = to_presentation(def);
  ToricPresentation b = th::genfam(11);
  REQUIRE(a.gb().size() == b.gb().size());
  for (size_t i = 0; i < a.gb().size(); ++i)
    CHECK(a.gb()[i].lead.same_exponents(b.gb()[i].lead));
}

TEST_CASE("empty relation list over no u-variables is the regular ring") {
  RingDefinitionFile def = parse_ring(
      "ring\n  p 5\n  yvars x y\nrelations\n");
  ToricPresentation pres = to_presentation(def);
  CHECK(pres.n() == 0);
  CHECK(pres.standard_monomials().monos == std::vector<Expo>{Expo{}});
}

TEST_CASE("round trip: parse, serialize, parse is the identity") {
  for (const char* name : {"e3", "genfam"}) {
    RingDefinitionFile def = preset(name);
    std::string text = serialize_ring(def);
    RingDefinitionFile again = parse_ring(text);
    CHECK(serialize_ring(again) == text);
  }
  RingDefinitionFile rels = parse_ring(
      "ring\n  p 7\n  yvars x y\n  uvars u\nrelations\n  u^2 = 3 x y^2\n");
  std::string text = serialize_ring(rels);
  CHECK(serialize_ring(parse_ring(text)) == text);

  RingDefinitionFile sg = parse_ring(
      "semigroup\n  rank 2\n  gens (2,0) (1,1) (0,2)\n");
  CHECK(serialize_ring(parse_ring(serialize_ring(sg))) == serialize_ring(sg));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_ring("ring\n  p 7\n  yvars x\nrelations\n  u^ = x\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
  }
  CHECK_THROWS_AS(parse_ring("relations\n  u = x\n"), ParseError);
  CHECK_THROWS_AS(parse_ring("ring\n  p 7\n  what 3\n"), ParseError);
  CHECK_THROWS_AS(parse_ring("ring\n  p 7\nrelations\n  u v\n"), ParseError);
  // unknown variables surface as validation errors at materialization
  RingDefinitionFile def =
      parse_ring("ring\n  p 7\n  yvars x\n  uvars u\nrelations\n  u = w\n");
  CHECK_THROWS_AS(to_presentation(def), ValidationError);
}

TEST_CASE("family blocks and constraint names") {
  RingDefinitionFile def = parse_ring(
      "ring\n  p 7\n  yvars x y z\n  uvars u v\n"
      "family\n  m 3\n  alpha (1,2,3) (5,1,6)\n  beta (2,1,3)\n"
      "  a 1 1\n  b 1\n");
  auto fam = to_family(def);
  REQUIRE(fam.has_value());
  ToricPresentation pres = build_family_T(*fam);
  CHECK(pres.relations().size() == 3);

  RingDefinitionFile bad = parse_ring(
      "ring\n  p 7\n  yvars x y z\n  uvars u v\n"
      "family\n  m 3\n  alpha (1,2,3) (5,1,6)\n  beta (2,1,3)\n"
      "  a 2 1\n  b 1\n");
  CHECK_THROWS_WITH_AS(build_family_T(*to_family(bad)), "a1*a2 != c^m",
                       ConstraintViolatedError);
}

TEST_CASE("semigroup extraction") {
  // explicit block wins
  RingDefinitionFile sg = parse_ring(
      "semigroup\n  rank 3\n  gens (3,0,0) (0,3,0) (0,0,1) (1,2,1) (5,1,2)\n");
  AffineSemigroup g = to_semigroup(sg);
  CHECK(g.rank() == 3);
  CHECK(g.gens().size() == 5);
  // bipartite definitions derive the image semigroup of the parametrization
  AffineSemigroup ge3 = to_semigroup(preset("e3"));
  CHECK(ge3.gens().size() == 5);
  CHECK(ge3.contains(th::ye(1, 2, 1)));
  CHECK(ge3.contains(th::ye(5, 1, 2)));
}

TEST_CASE("ideal parser for the chi command") {
  const FqField* F = FqField::get(101);
  auto ideal = parse_ideal({"y = x^2", "w"}, {"x", "y", "w"}, F);
  REQUIRE(ideal.size() == 2);
  CHECK(ideal[1].tail.has_value() == false);  // pure monomial generator
}
