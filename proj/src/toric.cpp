#include "toricmcm/toric.hpp"

#include <algorithm>
#include <numeric>

#include "toricmcm/errors.hpp"

namespace toricmcm {

namespace {

ZZ qq_den(const QQ& q) { return q.get_den(); }

long long to_ll(const ZZ& z) {
  if (!z.fits_slong_p()) throw OverflowError("integer out of range");
  return z.get_si();
}

}  // namespace

void Semigroup::validate() const {
  if (n < 1) throw NotFullError("semigroup rank must be positive");
  ZMat m;
  for (const auto& g : gens) {
    if (int(g.size()) != n) throw NotFullError("generator length mismatch");
    bool nonneg = true, nonzero = false;
    for (auto e : g) {
      if (e < 0) nonneg = false;
      if (e != 0) nonzero = true;
    }
    if (!nonneg || !nonzero)
      throw NotFullError("generators must be nonzero and nonnegative");
    ZVec row;
    for (auto e : g) row.push_back(zz(e));
    m.push_back(row);
  }
  if (zrank(m) != n)
    throw NotFullError("generators do not span the ambient space");
  auto am = axis_multiples();
  for (int i = 0; i < n; ++i)
    if (am[i] == 0)
      throw NotFullError("no pure multiple of axis " + std::to_string(i + 1) +
                         " among the generators");
}

std::vector<long long> Semigroup::axis_multiples() const {
  std::vector<long long> am(n, 0);
  for (const auto& g : gens) {
    int support = 0, var = -1;
    for (int i = 0; i < n; ++i)
      if (g[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (am[var] == 0 || g[var] < am[var])) am[var] = g[var];
  }
  return am;
}

std::vector<QQ> PhiMatrix::apply(const Expo& gamma) const {
  std::vector<QQ> out(d(), QQ(0));
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < d(); ++j) out[j] += QQ(long(gamma[i])) * rows[i][j];
  return out;
}

bool Character::is_trivial() const {
  for (const auto& v : values)
    if (!v.is_one()) return false;
  return true;
}

Character BipartiteData::trivial_character() const {
  Character c;
  for (size_t i = 0; i < gamma.gens.size(); ++i)
    c.values.push_back(Fq{field, field->one()});
  return c;
}

std::vector<IntegralityRow> check_integral(const PhiMatrix& A,
                                           const Semigroup& gamma) {
  std::vector<IntegralityRow> rows;
  for (const auto& g : gamma.gens) {
    IntegralityRow r;
    r.gamma = g;
    r.image = A.apply(g);
    r.integral = true;
    for (const auto& q : r.image)
      if (qq_den(q) != 1 || q < 0) r.integral = false;
    rows.push_back(r);
  }
  return rows;
}

namespace {

void check_character_consistency(const BipartiteData& data) {
  // for every integer relation sum c_i gamma_i = 0 among the generators the
  // product of chi values with those exponents must be 1
  size_t g = data.gamma.gens.size();
  if (data.chi.values.size() != g)
    throw InconsistentCharacterError("character value count mismatch");
  for (const auto& v : data.chi.values)
    if (v.is_zero())
      throw InconsistentCharacterError("character values must be units");
  ZMat M(data.gamma.n, ZVec(g, 0));
  for (size_t j = 0; j < g; ++j)
    for (int i = 0; i < data.gamma.n; ++i)
      M[i][j] = zz(data.gamma.gens[j][i]);
  for (const auto& rel : integer_kernel(M)) {
    Fq prod{data.field, data.field->one()};
    for (size_t j = 0; j < g; ++j)
      prod = prod * fq_pow(data.chi.values[j], to_ll(rel[j]));
    if (!prod.is_one())
      throw InconsistentCharacterError(
          "character is inconsistent with a relation among the generators");
  }
}

}  // namespace

ToricPresentation build_bipartite(const BipartiteData& data) {
  data.gamma.validate();
  int n = data.gamma.n, d = data.phi.d();
  if (data.phi.n() != n)
    throw ValidationError("phi row count must match the semigroup rank");
  auto rows = check_integral(data.phi, data.gamma);
  for (const auto& r : rows)
    if (!r.integral)
      throw NotIntegralError("phi is not positive integral on the semigroup");
  check_character_consistency(data);
  std::vector<BinomialElement> rels;
  for (size_t j = 0; j < data.gamma.gens.size(); ++j) {
    Monomial lead{Fq{data.field, data.field->one()}, data.gamma.gens[j],
                  Expo(d, 0)};
    Expo ye(d);
    for (int i = 0; i < d; ++i) ye[i] = to_ll(rows[j].image[i].get_num());
    Monomial tail{-data.chi.values[j], Expo(n, 0), ye};
    rels.push_back({lead, tail});
  }
  return ToricPresentation(data.field, d, n, rels, MonomialOrder{},
                           data.ynames, data.unames);
}

NoetherReport check_noether_normalization(const BipartiteData& data) {
  NoetherReport rep;
  auto am = data.gamma.axis_multiples();
  rep.finite = true;
  for (auto a : am)
    if (a == 0) rep.finite = false;
  rep.reduction = true;
  for (const auto& row : data.phi.rows) {
    QQ s(0);
    for (const auto& q : row) s += q;
    if (s <= 1) rep.reduction = false;
  }
  for (const auto& g : data.gamma.gens) {
    QQ img(0);
    for (const auto& q : data.phi.apply(g)) img += q;
    long long norm = 0;
    for (auto e : g) norm += e;
    rep.norm_nondecreasing.push_back(img >= QQ(long(norm)));
  }
  return rep;
}

namespace {

std::string expo_str(const Expo& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace

ToricPresentation build_family_T(const FamilyTParams& p) {
  const FqField* F = p.field;
  auto one = Fq{F, F->one()};
  std::vector<BinomialElement> rels;
  if (p.m == 2) {
    if (p.n < 2) throw ConstraintViolatedError("m=2 family needs n >= 2");
    if (int(p.alpha.size()) != p.n || int(p.a.size()) != p.n)
      throw ConstraintViolatedError("family data sizes do not match n");
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j) {
        const Fq& bij = p.b[i][j];
        if (!(p.a[i] * p.a[j] == bij * bij))
          throw ConstraintViolatedError("a" + std::to_string(i + 1) + "*a" +
                                        std::to_string(j + 1) + " != b" +
                                        std::to_string(i + 1) +
                                        std::to_string(j + 1) + "^2");
        for (int t = 0; t < p.d; ++t)
          if (p.alpha[i][t] + p.alpha[j][t] != 2 * p.beta[i][j][t])
            throw ConstraintViolatedError(
                "alpha" + std::to_string(i + 1) + "+alpha" +
                std::to_string(j + 1) + " != 2*beta at " + expo_str(p.beta[i][j]));
      }
    for (int i = 0; i < p.n; ++i) {
      Expo ue(p.n, 0);
      ue[i] = 2;
      rels.push_back({Monomial{one, ue, Expo(p.d, 0)},
                      Monomial{-p.a[i], Expo(p.n, 0), p.alpha[i]}});
    }
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j) {
        Expo ue(p.n, 0);
        ue[i] = ue[j] = 1;
        rels.push_back({Monomial{one, ue, Expo(p.d, 0)},
                        Monomial{-p.b[i][j], Expo(p.n, 0), p.beta[i][j]}});
      }
  } else {
    if (p.n != 2 || p.m < 3 || p.m % 2 == 0)
      throw ConstraintViolatedError("odd-m family needs n = 2 and odd m >= 3");
    const Fq& a1 = p.a[0];
    const Fq& a2 = p.a[1];
    const Fq& c = p.b[0][0];
    if (!(a1 * a2 == fq_pow(c, p.m)))
      throw ConstraintViolatedError("a1*a2 != c^m");
    const Expo& beta = p.beta[0][0];
    for (int t = 0; t < p.d; ++t)
      if (p.alpha[0][t] + p.alpha[1][t] != p.m * beta[t])
        throw ConstraintViolatedError("alpha1+alpha2 != m*beta");
    for (int i = 0; i < 2; ++i) {
      Expo ue(2, 0);
      ue[i] = p.m;
      rels.push_back({Monomial{one, ue, Expo(p.d, 0)},
                      Monomial{-p.a[i], Expo(2, 0), p.alpha[i]}});
    }
    rels.push_back({Monomial{one, Expo{1, 1}, Expo(p.d, 0)},
                    Monomial{-c, Expo(2, 0), beta}});
  }
  return ToricPresentation(F, p.d, p.n, rels, MonomialOrder{}, p.ynames,
                           p.unames);
}

BipartiteData family_T_to_bipartite(const FamilyTParams& p) {
  BipartiteData data;
  data.field = p.field;
  data.ynames = p.ynames;
  data.unames = p.unames;
  data.gamma.n = p.n;
  data.phi.rows.assign(p.n, std::vector<QQ>(p.d, QQ(0)));
  if (p.m == 2) {
    for (int i = 0; i < p.n; ++i)
      for (int t = 0; t < p.d; ++t)
        data.phi.rows[i][t] = QQ(long(p.alpha[i][t]), 2);
    for (int i = 0; i < p.n; ++i) {
      Expo g(p.n, 0);
      g[i] = 2;
      data.gamma.gens.push_back(g);
      data.chi.values.push_back(p.a[i]);
    }
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j) {
        Expo g(p.n, 0);
        g[i] = g[j] = 1;
        data.gamma.gens.push_back(g);
        data.chi.values.push_back(p.b[i][j]);
      }
  } else {
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < p.d; ++t)
        data.phi.rows[i][t] = QQ(long(p.alpha[i][t]), long(p.m));
    for (int i = 0; i < 2; ++i) {
      Expo g(2, 0);
      g[i] = p.m;
      data.gamma.gens.push_back(g);
      data.chi.values.push_back(p.a[i]);
    }
    data.gamma.gens.push_back(Expo{1, 1});
    data.chi.values.push_back(p.b[0][0]);
  }
  for (auto& row : data.phi.rows)
    for (auto& q : row) q.canonicalize();
  return data;
}

bool is_tame(const PhiMatrix& A, long long p) {
  // independent rows
  ZMat scaled;
  for (const auto& row : A.rows) {
    ZZ l(1);
    for (const auto& q : row) {
      ZZ den = qq_den(q);
      ZZ g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
      l = l / g * den;
    }
    ZVec r;
    for (const auto& q : row) r.push_back(q.get_num() * (l / qq_den(q)));
    scaled.push_back(r);
  }
  if (zrank(scaled) != A.n()) return false;
  for (const auto& row : A.rows)
    for (const auto& q : row)
      if (qq_den(q) % zz(p) == 0) return false;
  return true;
}

TrivializedCharacter trivialize_character(const BipartiteData& data,
                                          int max_extension_factor) {
  data.gamma.validate();
  if (!is_tame(data.phi, data.field->p()))
    throw WildError("phi is wild: dependent rows or p divides a denominator");
  auto rows = check_integral(data.phi, data.gamma);
  for (const auto& r : rows)
    if (!r.integral)
      throw NotIntegralError("phi is not positive integral on the semigroup");
  check_character_consistency(data);

  int d = data.phi.d();
  size_t g = data.gamma.gens.size();
  int k0 = data.field->k();
  for (int factor = 1; factor <= max_extension_factor; ++factor) {
    const FqField* K = FqField::get(data.field->p(), k0 * factor);
    ZZ M = zz(K->size() - 1);
    ZMat A(g, ZVec(d, 0));
    ZVec b(g, 0);
    bool embeddable = true;
    for (size_t j = 0; j < g; ++j) {
      for (int i = 0; i < d; ++i)
        A[j][i] = rows[j].image[i].get_num();
      Fq cj = fq_embed(data.chi.values[j], K);
      if (cj.is_zero()) {
        embeddable = false;
        break;
      }
      b[j] = zz(K->dlog(cj.v));
    }
    if (!embeddable) continue;
    auto sol = solve_mod(A, b, M);
    if (!sol.particular) continue;

    // canonicalize: smallest h (lexicographic on element encodings) over the
    // solution coset when the coset is small enough to enumerate
    ZVec L = *sol.particular;
    auto h_of = [&](const ZVec& logs) {
      std::vector<Fq> h;
      for (int i = 0; i < d; ++i)
        h.push_back(fq_pow(Fq{K, K->generator()}, to_ll(logs[i])));
      return h;
    };
    std::vector<Fq> h = h_of(L);
    if (!sol.homogeneous.empty() && sol.homogeneous.size() <= 3) {
      long long radix = std::min<long long>(to_ll(M), 64);
      long long total = 1;
      for (size_t t = 0; t < sol.homogeneous.size() && total <= 300000; ++t)
        total *= radix;
      auto key = [](const std::vector<Fq>& v) {
        std::vector<uint64_t> ks;
        for (auto& x : v) ks.push_back(x.v);
        return ks;
      };
      if (total <= 300000) {
        for (long long it = 0; it < total; ++it) {
          ZVec cand = L;
          long long rest = it;
          for (size_t t = 0; t < sol.homogeneous.size(); ++t) {
            long long c = rest % radix;
            rest /= radix;
            for (int i = 0; i < d; ++i)
              cand[i] = (cand[i] + zz(c) * sol.homogeneous[t][i]) % M;
          }
          auto hc = h_of(cand);
          if (key(hc) < key(h)) h = hc;
        }
      }
    }

    // verify and build the purely toric presentation
    for (size_t j = 0; j < g; ++j) {
      Fq prod{K, K->one()};
      for (int i = 0; i < d; ++i)
        prod = prod * fq_pow(h[i], to_ll(rows[j].image[i].get_num()));
      Fq cj = fq_embed(data.chi.values[j], K);
      if (!(prod == cj))
        throw ValidationError("internal: trivialization verification failed");
    }
    BipartiteData triv = data;
    triv.field = K;
    triv.chi.values.assign(g, Fq{K, K->one()});
    TrivializedCharacter out{h, build_bipartite(triv), K};
    return out;
  }
  throw NoSolutionInFieldError(
      "no solution for the character system within attempted extensions",
      k0 * max_extension_factor);
}

ParametrizationKernel parametrization_kernel(const BipartiteData& data,
                                             int sweep_limit) {
  data.gamma.validate();
  if (!data.chi.is_trivial())
    throw ValidationError(
        "parametrization kernel requires a trivial character; apply "
        "trivialize_character first");
  int n = data.gamma.n, d = data.phi.d();
  ParametrizationKernel out;
  // per-column lcm of denominators; scaling a coordinate does not change the
  // kernel lattice but keeps the published map minimal
  std::vector<ZZ> colscale(d, ZZ(1));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) {
      ZZ den = qq_den(data.phi.rows[i][j]);
      ZZ g;
      mpz_gcd(g.get_mpz_t(), colscale[j].get_mpz_t(), den.get_mpz_t());
      colscale[j] = colscale[j] / g * den;
    }
  for (int i = 0; i < d; ++i) {
    Expo img(d, 0);
    img[i] = to_ll(colscale[i]);
    out.y_images.push_back(img);
  }
  for (int i = 0; i < n; ++i) {
    Expo img(d, 0);
    for (int j = 0; j < d; ++j) {
      QQ v = data.phi.rows[i][j] * QQ(colscale[j]);
      v.canonicalize();
      if (qq_den(v) != 1)
        throw NotIntegralError("internal: column scaling not integral");
      img[j] = to_ll(v.get_num());
    }
    out.u_images.push_back(img);
  }
  // kernel lattice of the exponent matrix, columns ordered (u | y)
  ZMat M(d, ZVec(n + d, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) M[j][i] = zz(out.u_images[i][j]);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) M[j][n + i] = zz(out.y_images[i][j]);
  ZMat kern = integer_kernel(M);

  const FqField* F = data.field;
  Fq one{F, F->one()};
  std::vector<BinomialElement> gens;
  for (const auto& v : kern) {
    Monomial pos{one, Expo(n, 0), Expo(d, 0)};
    Monomial neg{-one, Expo(n, 0), Expo(d, 0)};
    for (int i = 0; i < n + d; ++i) {
      long long c = to_ll(v[i]);
      auto& target = c > 0 ? pos : neg;
      if (c == 0) continue;
      if (i < n)
        target.ue[i] = std::llabs(c);
      else
        target.ye[i - n] = std::llabs(c);
    }
    gens.push_back({pos, neg});
  }

  // saturate with respect to every variable: weight order with the variable
  // cheapest, then divide out the variable
  std::vector<long long> weights(n + d, 0);
  for (int i = 0; i < n; ++i) {
    long long w = 0;
    for (auto e : out.u_images[i]) w += e;
    weights[i] = w;
  }
  for (int i = 0; i < d; ++i) {
    long long w = 0;
    for (auto e : out.y_images[i]) w += e;
    weights[n + i] = w;
  }
  bool divided = true;
  int sweeps = 0;
  while (divided && sweeps < sweep_limit) {
    divided = false;
    ++sweeps;
    for (int var = 0; var < n + d; ++var) {
      MonomialOrder ord;
      ord.kind = MonomialOrder::kSaturating;
      ord.weights = weights;
      ord.cheap_var = var;
      gens = buchberger(gens, ord);
      for (auto& e : gens) {
        if (!e.tail) continue;
        auto at = [&](Monomial& m) -> long long& {
          return var < n ? m.ue[var] : m.ye[var - n];
        };
        long long c = std::min(at(e.lead), at(*e.tail));
        if (c > 0) {
          at(e.lead) -= c;
          at(*e.tail) -= c;
          divided = true;
        }
      }
    }
  }
  out.saturation_complete = !divided;
  MonomialOrder def;
  out.generators = buchberger(gens, def);
  return out;
}

}  // namespace toricmcm
