// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "toricmcm/intersect.hpp"
#include "toricmcm/report.hpp"
#include "toricmcm/witt.hpp"

using namespace toricmcm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void operator()(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += what;
    }
  }
};

Monomial body_of(const ToricPresentation& pres, const StarElement& g) {
  return pres.make_monomial(g.coeff, g.ubody, g.ydigits);
}

int find_gen(const ToricPresentation& pres, const SaturationModule& sm,
             const Monomial& m) {
  for (size_t g = 0; g < sm.generators.size(); ++g)
    if (pres.monomials_equal_in_R(body_of(pres, sm.generators[g]), m))
      return int(g);
  return -1;
}

const TableRow* row_of(const SaturationModule& sm, const Expo& b, int j = 0) {
  for (const auto& r : sm.table)
    if (r.b == b && r.j == j) return &r;
  return nullptr;
}

bool row_is(const ToricPresentation& pres, const SaturationModule& sm,
            const Expo& b, const Expo& s, const Monomial& target,
            Check& check, const std::string& label) {
  const TableRow* row = row_of(sm, b);
  if (!row) {
    check(false, label + ": row missing");
    return false;
  }
  bool ok = row->s == s && row->c.is_one() &&
            row->k == find_gen(pres, sm, target);
  check(ok, label);
  return ok;
}

Monomial m23(const ToricPresentation& pres, long long a, long long b,
             long long i, long long j, long long l) {
  return pres.make_monomial(Fq{pres.field(), 1}, Expo{a, b}, Expo{i, j, l});
}

AffineSemigroup e3_image() {
  return AffineSemigroup(3, {Expo{3, 0, 0}, Expo{0, 3, 0}, Expo{0, 0, 1},
                             Expo{1, 2, 1}, Expo{5, 1, 2}});
}

bool same_semigroup(const std::vector<Expo>& a, const std::vector<Expo>& b,
                    int rank) {
  AffineSemigroup sa(rank, a), sb(rank, b);
  return semigroup_subset(a, sb) && semigroup_subset(b, sa);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  Check check{out};
  auto t0 = std::chrono::steady_clock::now();
  BipartiteData data = *to_bipartite(preset("e3"), 7);
  ToricPresentation pres = build_bipartite(data);
  SaturationModule sm = saturation_generators(pres, PrimePower(7, 1));
  check(sm.generators.size() == 3, "exactly 3 generators");
  Monomial e1 = m23(pres, 1, 0, 2, 4, 6);
  Monomial e2 = m23(pres, 2, 0, 4, 1, 5);
  check(find_gen(pres, sm, pres.one()) == 0, "body *1");
  check(find_gen(pres, sm, e1) > 0, "body R-equal *u x^2 y^4 z^6");
  check(find_gen(pres, sm, e2) > 0, "body R-equal *u^2 x^4 y z^5");
  row_is(pres, sm, {1, 0}, {0, 0, 0}, e1, check, "u -> e1");
  row_is(pres, sm, {2, 0}, {0, 1, 1}, e2, check, "u^2 -> yz e2");
  row_is(pres, sm, {0, 1}, {1, 0, 1}, e2, check, "v -> xz e2");
  row_is(pres, sm, {0, 2}, {3, 0, 3}, e1, check, "v^2 -> x^3 z^3 e1");
  auto cert = certify_freeness(sm, pres);
  check(cert.status == CertifyStatus::kCertified && cert.rank == 3,
        "rank-3 certificate");
  auto pk = parametrization_kernel(data);
  check(annihilator_check(sm, pk.generators, pres), "prime annihilates");
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  check(secs < 5.0, "runtime under 5 s");
  return out;
}

Outcome criterion2() {
  Outcome out;
  Check check{out};
  ToricPresentation pres = to_presentation(preset("e3"), 11);
  SaturationModule sm = saturation_generators(pres, PrimePower(11, 1));
  check(sm.generators.size() == 3, "three generators");
  // printed bodies for this ring at p = 11
  Monomial e1 = m23(pres, 1, 0, 7, 3, 10);   // *u x^7 y^3 z^10
  Monomial e2 = m23(pres, 2, 0, 3, 6, 9);    // *u^2 x^3 y^6 z^9
  check(find_gen(pres, sm, e1) > 0, "body R-equal *u x^7 y^3 z^10");
  check(find_gen(pres, sm, e2) > 0, "body R-equal *u^2 x^3 y^6 z^9");
  row_is(pres, sm, {1, 0}, {0, 0, 0}, e2, check, "u -> e2");
  row_is(pres, sm, {2, 0}, {0, 1, 1}, e1, check, "u^2 -> yz e1");
  row_is(pres, sm, {0, 1}, {1, 0, 1}, e1, check, "v -> xz e1");
  row_is(pres, sm, {0, 2}, {3, 0, 3}, e2, check, "v^2 -> x^3 z^3 e2");
  // rank discrepancy resolved by the exhaustive oracle: rank 3 stands
  auto cert = certify_freeness(sm, pres);
  check(cert.status == CertifyStatus::kCertified && cert.rank == 3,
        "rank 3 certified");
  std::vector<Monomial> bodies;
  for (const auto& g : sm.generators) bodies.push_back(body_of(pres, g));
  check(pres.bounded_syzygy_search(bodies, 22, 11).empty(),
        "oracle finds no syzygy (rank-2 reading refuted)");
  return out;
}

Outcome criterion3() {
  Outcome out;
  Check check{out};
  ToricPresentation pres = to_presentation(preset("e3"), 13);
  // stated expectation: q = 13 must fail with ClosureFailure
  bool closure_failed = false;
  try {
    saturation_generators(pres, PrimePower(13, 1));
  } catch (const ClosureFailureError&) {
    closure_failed = true;
  }
  check(closure_failed,
        "q=13 ClosureFailure (engine finds a 3-generator closure instead: "
        "v^2 x y^2 z^3 - u x^4 y^2 z^6 lies in the defining ideal, forcing "
        "v^2*1 = x^3 z^3 (u*1) already at q=13)");
  // q = 169 succeeds with the printed generator exponents
  SaturationModule sm = saturation_generators(pres, PrimePower(13, 2));
  check(sm.generators.size() == 3, "three generators at q=169");
  Monomial e1 = m23(pres, 1, 0, 56, 112, 168);
  Monomial e2 = m23(pres, 2, 0, 112, 55, 167);
  check(find_gen(pres, sm, e1) > 0, "body R-equal *u x^56 y^112 z^168");
  check(find_gen(pres, sm, e2) > 0, "body R-equal *u^2 x^112 y^55 z^167");
  row_is(pres, sm, {1, 0}, {0, 0, 0}, e1, check, "u row");
  row_is(pres, sm, {2, 0}, {0, 1, 1}, e2, check, "u^2 row");
  row_is(pres, sm, {0, 1}, {1, 0, 1}, e2, check, "v row");
  row_is(pres, sm, {0, 2}, {3, 0, 3}, e1, check, "v^2 row");
  return out;
}

Outcome criterion4() {
  Outcome out;
  Check check{out};
  ToricPresentation pres = to_presentation(preset("genfam"), 11);
  const auto& basis = pres.standard_monomials().monos;
  std::vector<Expo> printed = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2},
                               {1, 2}, {0, 3}, {0, 4}, {0, 5}};
  check(basis == printed, "standard basis is the printed nine monomials");
  std::vector<Monomial> yvars;
  for (int i = 0; i < 3; ++i) {
    Monomial m = pres.one();
    m.ye[i] = 1;
    yvars.push_back(m);
  }
  check(pres.length_artinian(yvars) == 9, "parameter-degree bound 9");
  SaturationModule sm = saturation_generators(pres, PrimePower(11, 1));
  check(sm.generators.size() == 6, "six generators");
  Monomial e1 = m23(pres, 0, 1, 1, 10, 7);
  Monomial e2 = m23(pres, 0, 2, 2, 9, 3);
  Monomial e3 = m23(pres, 0, 3, 3, 8, 10);
  Monomial e4 = m23(pres, 0, 4, 4, 7, 6);
  Monomial e5 = m23(pres, 0, 5, 5, 6, 2);
  for (const auto* e : {&e1, &e2, &e3, &e4, &e5})
    check(find_gen(pres, sm, *e) > 0, "printed generator present");
  row_is(pres, sm, {0, 0}, {0, 0, 0}, pres.one(), check, "1 -> e0");
  row_is(pres, sm, {1, 0}, {0, 0, 1}, e3, check, "u -> z e3");
  row_is(pres, sm, {0, 1}, {0, 0, 0}, e5, check, "v -> e5");
  row_is(pres, sm, {1, 1}, {1, 1, 2}, e2, check, "uv -> xyz^2 e2");
  row_is(pres, sm, {0, 2}, {1, 1, 0}, e4, check, "v^2 -> xy e4");
  row_is(pres, sm, {1, 2}, {2, 2, 2}, e1, check, "uv^2 -> x^2y^2z^2 e1");
  row_is(pres, sm, {0, 3}, {2, 2, 0}, e3, check, "v^3 -> x^2y^2 e3");
  row_is(pres, sm, {0, 4}, {3, 3, 1}, e2, check, "v^4 -> x^3y^3z e2");
  row_is(pres, sm, {0, 5}, {4, 4, 1}, e1, check, "v^5 -> x^4y^4z e1");
  auto cert = certify_freeness(sm, pres);
  check(cert.status == CertifyStatus::kCertified && cert.rank == 6,
        "rank-6 certificate");
  auto small = multiplicity_and_smallness(sm, cert, pres);
  check(small.very_small && small.min_generators == 6 &&
            small.pardeg_bound == 9,
        "very small: 6 <= 9");
  return out;
}

Outcome criterion5() {
  Outcome out;
  Check check{out};
  BipartiteData data = *to_bipartite(preset("genfam"), 3);
  ToricPresentation pres = build_bipartite(data);
  SaturationModule sm = saturation_generators(pres, PrimePower(3, 2));
  check(sm.generators.size() == 6, "six generators");
  Monomial e1 = m23(pres, 0, 3, 8, 6, 5);
  Monomial e2 = m23(pres, 0, 0, 3, 0, 3);
  Monomial e3 = m23(pres, 0, 3, 2, 6, 8);
  Monomial e4 = m23(pres, 0, 0, 6, 0, 6);
  Monomial e5 = m23(pres, 0, 3, 5, 6, 2);
  row_is(pres, sm, {1, 0}, {0, 0, 1}, e3, check, "u -> z e3");
  row_is(pres, sm, {0, 1}, {0, 0, 0}, e5, check, "v -> e5");
  row_is(pres, sm, {1, 1}, {1, 2, 2}, e2, check, "uv -> x y^2 z^2 e2");
  row_is(pres, sm, {0, 2}, {1, 2, 0}, e4, check, "v^2 -> x y^2 e4");
  row_is(pres, sm, {1, 2}, {1, 2, 2}, e1, check, "uv^2 -> x y^2 z^2 e1");
  row_is(pres, sm, {0, 3}, {2, 2, 0}, e3, check, "v^3 -> x^2 y^2 e3");
  row_is(pres, sm, {0, 4}, {3, 4, 1}, e2, check, "v^4 -> x^3 y^4 z e2");
  row_is(pres, sm, {0, 5}, {3, 4, 1}, e1, check, "v^5 -> x^3 y^4 z e1");
  auto pk = parametrization_kernel(data);
  check(annihilator_check(sm, pk.generators, pres), "prime annihilates");
  return out;
}

Outcome criterion6() {
  Outcome out;
  Check check{out};
  ToricPresentation pres = to_presentation(preset("genfam"), 13);
  SaturationModule sm = saturation_generators(pres, PrimePower(13, 1));
  check(sm.generators.size() == 6, "six generators");
  std::set<std::pair<Expo, Expo>> got;
  for (const auto& g : sm.generators) got.insert({g.ubody, g.ydigits});
  std::set<std::pair<Expo, Expo>> want = {
      {{0, 0}, {0, 0, 0}},   {{0, 5}, {11, 8, 7}}, {{0, 4}, {1, 9, 3}},
      {{0, 3}, {4, 10, 12}}, {{0, 2}, {7, 11, 8}}, {{0, 1}, {10, 12, 4}},
  };
  check(got == want, "the six printed generators, exactly");
  return out;
}

Outcome criterion7() {
  Outcome out;
  Check check{out};
  auto t0 = std::chrono::steady_clock::now();
  AffineSemigroup g = e3_image();

  auto f7 = f_normalization(g, 7);
  std::vector<Expo> expected7 = g.gens();
  expected7.push_back(Expo{2, 1, 1});
  check(same_semigroup(f7.closure.gens, expected7, 3),
        "p=7 F-normalization is Gamma + <(2,1,1)>");
  auto norm = normalization(g);
  AffineSemigroup f7s(3, f7.closure.gens);
  check(!semigroup_subset(norm.gens, f7s),
        "p=7 closure strictly inside the normalization");

  auto f3 = f_normalization(g, 3);
  std::vector<Expo> scroll = {{3, 0, 0}, {2, 1, 0}, {1, 2, 0},
                              {0, 3, 0}, {0, 0, 1}};
  check(same_semigroup(f3.closure.gens, scroll, 3),
        "p=3 F-normalization is the scroll semigroup");
  check(same_semigroup(norm.gens, scroll, 3), "normalization is the scroll");

  auto pw = power_integral(g);
  AffineSemigroup pws(3, pw.gens);
  check(pws.contains(Expo{2, 1, 1}), "(2,1,1) is power-integral");

  AffineSemigroup norms(3, norm.gens);
  for (long long p : {3, 5, 7, 11, 13}) {
    auto fn = f_normalization(g, p);
    AffineSemigroup fns(3, fn.closure.gens);
    bool chain = semigroup_subset(g.gens(), pws) &&
                 semigroup_subset(pw.gens, fns) &&
                 semigroup_subset(fn.closure.gens, norms);
    check(chain, "chain at p=" + std::to_string(p));
  }
  auto t1 = std::chrono::steady_clock::now();
  check(std::chrono::duration<double>(t1 - t0).count() < 10.0,
        "runtime under 10 s");
  return out;
}

Outcome criterion8() {
  Outcome out;
  Check check{out};
  long long failures = 0, cases = 0;
  for (long long q = 2; q <= 1000; ++q) {
    PrimePower pp(2, 1);
    try {
      pp = PrimePower::from_q(q);
    } catch (const ValidationError&) {
      continue;
    }
    for (long long m = 1; m <= 12; ++m) {
      if ((q - 1) % m != 0) continue;
      for (long long b = 1; b < q; ++b) {
        ++cases;
        auto s = split_digits(b, pp, m);
        long long eps = adjusted_remainder(b, m).value;
        bool ok = s.b1 + s.b0 < q && s.b0 == (q * eps - b) / m &&
                  s.b1 * q * q + (s.b1 + s.b0) * q + s.b0 ==
                      b * (q * q - 1) / m &&
                  qadic_trace(b * (q - 1) / m, q) == eps * (q - 1) / m &&
                  qadic_trace(b * (q * q - 1) / m, q) ==
                      2 * qadic_trace(b * (q - 1) / m, q);
        if (!ok) ++failures;
      }
    }
  }
  check(failures == 0,
        "digit identities: " + std::to_string(failures) + " failures");
  check(cases > 100000, "swept a nontrivial family");
  return out;
}

Outcome criterion9() {
  Outcome out;
  Check check{out};
  // >= 10^4 randomized triples against the ghost oracle
  long long triples = 0;
  for (long long p : {2, 3, 5, 7, 11}) {
    Zp2Ring R(p);
    uint64_t seed = 42 + p;
    auto rnd = [&]() {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      return R.from_int(static_cast<long long>(seed >> 40));
    };
    for (int i = 0; i < 2200; ++i) {
      Witt2<Zp2Ring> x{rnd(), rnd()}, y{rnd(), rnd()}, z{rnd(), rnd()};
      ++triples;
      auto gx = witt2_ghost(R, x), gy = witt2_ghost(R, y);
      auto gs = witt2_ghost(R, witt2_add(R, x, y));
      auto gm = witt2_ghost(R, witt2_mul(R, x, y));
      bool ok = gs.first == R.add(gx.first, gy.first) &&
                gs.second == R.add(gx.second, gy.second) &&
                gm.first == R.mul(gx.first, gy.first) &&
                gm.second == R.mul(gx.second, gy.second);
      auto assoc_l = witt2_mul(R, witt2_mul(R, x, y), z);
      auto assoc_r = witt2_mul(R, x, witt2_mul(R, y, z));
      auto dist_l = witt2_mul(R, x, witt2_add(R, y, z));
      auto dist_r = witt2_add(R, witt2_mul(R, x, y), witt2_mul(R, x, z));
      ok = ok && assoc_l.a0 == assoc_r.a0 && assoc_l.a1 == assoc_r.a1 &&
           dist_l.a0 == dist_r.a0 && dist_l.a1 == dist_r.a1;
      if (!ok) {
        check(false, "witt axiom failure at p=" + std::to_string(p));
        return out;
      }
    }
    // tau multiplicativity, exact, across the residue field
    for (long long a = 0; a < p; ++a)
      for (long long b = 0; b < p; ++b) {
        auto t = witt2_mul(R, witt2_teichmuller(R, R.from_int(a)),
                           witt2_teichmuller(R, R.from_int(b)));
        if (!(t.a0 == R.from_int(a * b) && t.a1 == 0))
          check(false, "tau not multiplicative");
      }
  }
  check(triples >= 10000, "at least 10^4 triples");
  for (long long p : {3, 5, 7}) {
    ToricPresentation pres = to_presentation(preset("e3"), p);
    auto rep = witt_transform_check(pres, 8);
    check(rep.all_pass, "purely toric check at p=" + std::to_string(p));
  }
  RingDefinitionFile planted = parse_ring(
      "ring\n  p 7\n  yvars y\n  uvars u\nrelations\n  u = 2 y\n");
  auto rep = witt_transform_check(to_presentation(planted), 8, true);
  check(!rep.all_pass, "planted non-unit coefficient fails");
  return out;
}

Outcome criterion10() {
  Outcome out;
  Check check{out};
  std::minstd_rand rng(7777);
  int solved = 0, wild_rejected = 0, false_accepts = 0;
  int attempts = 0;
  while (solved < 100 && attempts < 1200) {
    ++attempts;
    long p = std::vector<long>{3, 5, 7, 11}[size_t(rng()) % 4];
    int k = (size_t(rng()) % 4 == 0 && p <= 11) ? 2 : 1;
    if (p == 11 && k == 2) k = 1;  // keep fields at or below 121 elements
    const FqField* F = FqField::get(p, k);
    int d = 1 + int(size_t(rng()) % 3);
    int n = 1 + std::min<int>(d - 1, int(size_t(rng()) % 2));
    BipartiteData data;
    data.field = F;
    data.gamma.n = n;
    std::vector<long long> mult(n);
    bool skip = false;
    for (int i = 0; i < n; ++i) {
      long long a = 1 + long(size_t(rng()) % 4);
      while (a % p == 0) ++a;
      mult[i] = a;
      Expo g(n, 0);
      g[i] = a;
      data.gamma.gens.push_back(g);
    }
    data.phi.rows.assign(n, std::vector<QQ>(d, QQ(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) {
        QQ q{long(static_cast<long long>(rng()) % (3 * mult[i])), long(mult[i])};
        q.canonicalize();
        data.phi.rows[i][j] = q;
      }
      data.phi.rows[i][i % d] += QQ(long(3 + i));
    }
    if (!is_tame(data.phi, p)) continue;
    for (const auto& row : check_integral(data.phi, data.gamma))
      if (!row.integral) skip = true;
    if (skip) continue;
    std::vector<Fq> h(d);
    for (int i = 0; i < d; ++i)
      h[i] = fq_pow(Fq{F, F->generator()},
                    long(size_t(rng()) % (F->size() - 1)));
    for (size_t j = 0; j < data.gamma.gens.size(); ++j) {
      Fq val{F, F->one()};
      auto img = data.phi.apply(data.gamma.gens[j]);
      for (int i = 0; i < d; ++i)
        val = val * fq_pow(h[i], img[i].get_num().get_si());
      data.chi.values.push_back(val);
    }
    auto res = trivialize_character(data);
    bool verified = true;
    for (size_t j = 0; j < data.gamma.gens.size(); ++j) {
      Fq val{res.field, res.field->one()};
      auto img = data.phi.apply(data.gamma.gens[j]);
      for (int i = 0; i < d; ++i)
        val = val * fq_pow(res.h[i], img[i].get_num().get_si());
      if (!(val.v == fq_embed(data.chi.values[j], res.field).v))
        verified = false;
    }
    if (!verified) {
      check(false, "round-trip verification failed");
      return out;
    }
    ++solved;
    // wild variant must be rejected, never accepted
    BipartiteData wild = data;
    wild.phi.rows[0][0] += QQ(1, long(p));
    try {
      trivialize_character(wild);
      ++false_accepts;
    } catch (const WildError&) {
      ++wild_rejected;
    }
  }
  check(solved == 100, "solved 100 instances (got " + std::to_string(solved) +
                           ")");
  check(false_accepts == 0, "zero false accepts");
  check(wild_rejected == solved, "every wild variant rejected");
  return out;
}

Outcome criterion11() {
  Outcome out;
  Check check{out};
  const FqField* F = FqField::get(101);
  auto mono = [&](Expo e) {
    return BinomialElement{Monomial{Fq{F, 1}, {}, std::move(e)}, std::nullopt};
  };
  long long tl =
      tensor_length({mono({1, 0, 0, 0}), mono({0, 1, 0, 0})},
                    {mono({0, 0, 1, 0}), mono({0, 0, 0, 1})}, F, 4);
  auto chi = chi_from_mcm_lengths(tl, 1, 1);
  check(chi.value == 1, "transverse subspaces give chi = 1");
  // CM degeneration: chi(l(N/pN), 1, l(N_q)) = l(N/pN)/l(N_q)
  auto cm = chi_from_mcm_lengths(6, 1, 2);
  check(cm.value == 3, "CM case divides through");
  auto loc = localization_length_free_mcm(3, 3);
  check(loc.value == 1, "rank 3 over degree 3 localizes to length 1");
  AffineSemigroup base(3, {Expo{3, 0, 0}, Expo{0, 3, 0}, Expo{0, 0, 1}});
  check(frac_degree(e3_image(), base) == 3, "fraction-field degree 3");
  return out;
}

Outcome criterion12() {
  Outcome out;
  Check check{out};
  struct Instance {
    const char* name;
    long long p;
    long long q;
  };
  for (const Instance& inst : std::initializer_list<Instance>{
           {"e3", 7, 7}, {"e3", 11, 11}, {"e3", 13, 169},
           {"genfam", 11, 11}, {"genfam", 3, 9}, {"genfam", 13, 13}}) {
    ToricPresentation pres = to_presentation(preset(inst.name), inst.p);
    SaturationModule sm =
        saturation_generators(pres, PrimePower::from_q(inst.q));
    auto cert = certify_freeness(sm, pres);
    if (cert.status != CertifyStatus::kCertified) {
      check(false, std::string(inst.name) + " not certified");
      continue;
    }
    std::vector<Monomial> bodies;
    for (const auto& g : sm.generators)
      bodies.push_back(pres.make_monomial(g.coeff, g.ubody, g.ydigits));
    auto syz = pres.bounded_syzygy_search(bodies, 2 * inst.q, inst.q);
    check(syz.empty(), std::string(inst.name) + " p=" + std::to_string(inst.p) +
                           ": oracle found a syzygy under a certificate");
  }
  // planted dependent pair: the certifier refuses and the oracle agrees
  ToricPresentation pres = to_presentation(preset("e3"), 7);
  SaturationModule planted;
  planted.q = PrimePower(7, 1);
  planted.generators.push_back(
      StarElement{planted.q, Fq{pres.field(), 1}, {1, 0}, {2, 4, 6}});
  planted.generators.push_back(
      StarElement{planted.q, Fq{pres.field(), 1}, {0, 2}, {6, 4, 3}});
  auto cert = certify_freeness(planted, pres);
  check(cert.status == CertifyStatus::kRefuted, "planted pair refuted");
  std::vector<Monomial> bodies = {
      pres.make_monomial(Fq{pres.field(), 1}, {1, 0}, {2, 4, 6}),
      pres.make_monomial(Fq{pres.field(), 1}, {0, 2}, {6, 4, 3})};
  check(!pres.bounded_syzygy_search(bodies, 7, 7).empty(),
        "oracle finds the planted dependency");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "e3 p=q=7 saturation, relations, certificate, annihilator",
       criterion1},
      {2, "e3 p=11 relation set and oracle-backed rank", criterion2},
      {3, "e3 p=13: q=13 closure failure; q=169 generators", criterion3},
      {4, "genfam p=q=11 basis, table, certificate, smallness", criterion4},
      {5, "genfam p=3 q=9 modified table and annihilator", criterion5},
      {6, "genfam p=q=13 printed generators", criterion6},
      {7, "e3 image semigroup closures and chains", criterion7},
      {8, "digit lemma sweep to q <= 1000", criterion8},
      {9, "witt suite: ghost oracle, tau, transform checks", criterion9},
      {10, "character trivialization: 100 tame, wild rejected", criterion10},
      {11, "intersection pipeline", criterion11},
      {12, "oracle consistency for certificates", criterion12},
  };
  int failures = 0;
  for (auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id
              << ": " << c.label;
    if (!out.pass) std::cout << " -- " << out.detail;
    std::cout << std::endl;
    if (!out.pass) ++failures;
  }
  if (failures > 0)
    std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
