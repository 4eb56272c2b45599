#include "toricmcm/report.hpp"

#include <chrono>

#include "toricmcm/intersect.hpp"
#include "toricmcm/version.hpp"
#include "toricmcm/witt.hpp"

namespace toricmcm {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

Json expo_json(const Expo& e) {
  Json a = Json::array();
  for (auto x : e) a.push_back(x);
  return a;
}

Json star_json(const StarElement& s, const ToricPresentation& pres) {
  Json j;
  j["coeff"] = s.coeff.v;
  j["uexp"] = expo_json(s.ubody);
  j["ydigits"] = expo_json(s.ydigits);
  j["pretty"] =
      "*" + pres.to_string(pres.make_monomial(s.coeff, s.ubody, s.ydigits));
  return j;
}

std::string ymono_str(const Expo& s, const ToricPresentation& pres) {
  Monomial m = pres.one();
  m.ye = s;
  return pres.to_string(m);
}

Json table_json(const SaturationModule& sm, const ToricPresentation& pres) {
  Json rows = Json::array();
  for (const auto& r : sm.table) {
    Json j;
    j["b"] = expo_json(r.b);
    j["j"] = r.j;
    j["s"] = expo_json(r.s);
    j["c"] = r.c.v;
    j["k"] = r.k;
    Monomial bm = pres.one();
    bm.ue = r.b;
    std::string coeff;
    if (!r.c.is_one()) coeff = fq_to_string(r.c) + " ";
    std::string smono = ymono_str(r.s, pres);
    if (smono != "1") coeff += smono + " ";
    j["pretty"] = pres.to_string(bm) + " e" + std::to_string(r.j) + " = " +
                  coeff + "e" + std::to_string(r.k);
    rows.push_back(j);
  }
  return rows;
}

Json certify_json(const CertifyResult& c) {
  Json j;
  j["status"] = c.status == CertifyStatus::kCertified
                    ? "certified"
                    : (c.status == CertifyStatus::kRefuted ? "refuted"
                                                           : "inconclusive");
  j["rank"] = c.rank;
  if (!c.reason.empty()) j["reason"] = c.reason;
  Json pairs = Json::array();
  for (const auto& p : c.pairs) {
    Json pj;
    pj["j"] = p.j;
    pj["k"] = p.k;
    pj["status"] = p.status == PairStatus::kIndependent
                       ? "independent"
                       : (p.status == PairStatus::kDependent ? "dependent"
                                                             : "unknown");
    pj["detail"] = p.detail;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  return j;
}

Json gens_json(const std::vector<Expo>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(expo_json(g));
  return a;
}

PrimePower flag_q(const DispatchFlags& flags) {
  if (!flags.q) throw ValidationError("this command requires --q");
  return PrimePower::from_q(*flags.q);
}

long long default_trunc(const ToricPresentation& pres) {
  long long maxdeg = 1;
  for (const auto& r : pres.relations()) {
    long long dl = 0;
    for (auto e : r.lead.ue) dl += e;
    for (auto e : r.lead.ye) dl += e;
    maxdeg = std::max(maxdeg, dl);
    if (r.tail) {
      long long dt = 0;
      for (auto e : r.tail->ue) dt += e;
      for (auto e : r.tail->ye) dt += e;
      maxdeg = std::max(maxdeg, dt);
    }
  }
  return 2 * maxdeg;
}

}  // namespace

Json error_report(const std::string& command, const std::string& code,
                  const std::string& message) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["engine_version"] = kEngineVersion;
  j["command"] = command;
  j["error"] = Json{{"code", code}, {"message", message}};
  return j;
}

DispatchResult dispatch(const std::string& command,
                        const RingDefinitionFile& def,
                        const DispatchFlags& flags) {
  auto t0 = std::chrono::steady_clock::now();
  DispatchResult out;
  Json& j = out.report;
  j["schema_version"] = kReportSchemaVersion;
  j["engine_version"] = kEngineVersion;
  j["command"] = command;
  j["input_hash"] = hex64(fnv1a64(serialize_ring(def)));
  Json result;

  if (command == "basis") {
    ToricPresentation pres = to_presentation(def, flags.p, flags.k);
    const auto& sb = pres.standard_monomials();
    Json arr = Json::array();
    for (const auto& m : sb.monos) {
      Monomial mono = pres.one();
      mono.ue = m;
      Json e;
      e["uexp"] = expo_json(m);
      e["pretty"] = pres.to_string(mono);
      arr.push_back(e);
    }
    result["standard_basis"] = arr;
    result["count"] = sb.monos.size();
  } else if (command == "pardeg") {
    ToricPresentation pres = to_presentation(def, flags.p, flags.k);
    std::vector<Monomial> yvars;
    for (int i = 0; i < pres.d(); ++i) {
      Monomial m = pres.one();
      m.ye[i] = 1;
      yvars.push_back(m);
    }
    result["length"] = pres.length_artinian(yvars);
  } else if (command == "saturate" || command == "certify") {
    ToricPresentation pres = to_presentation(def, flags.p, flags.k);
    PrimePower q = flag_q(flags);
    SaturationModule sm = saturation_generators(pres, q);
    result["q"] = Json{{"p", q.p}, {"e", q.e}, {"q", q.q}};
    Json gens = Json::array();
    for (const auto& g : sm.generators) gens.push_back(star_json(g, pres));
    result["generators"] = gens;
    result["table"] = table_json(sm, pres);
    Json wits = Json::array();
    for (const auto& w : sm.witnesses) {
      Json wj;
      wj["s"] = expo_json(w.s);
      wj["c"] = w.c.v;
      wj["b"] = expo_json(w.b);
      wits.push_back(wj);
    }
    result["witnesses"] = wits;
    if (command == "certify") {
      CertifyResult cert = certify_freeness(sm, pres);
      result["certificate"] = certify_json(cert);
      if (cert.status != CertifyStatus::kCertified) out.exit_code = 2;
      // the syzygy oracle cross-check rides along: no q-pattern syzygy may
      // exist among the generator bodies when a certificate is issued
      std::vector<Monomial> bodies;
      for (const auto& g : sm.generators)
        bodies.push_back(pres.make_monomial(g.coeff, g.ubody, g.ydigits));
      long long bound = q.q * default_trunc(pres) / 2;
      auto syz = pres.bounded_syzygy_search(bodies, bound, q.q);
      result["syzygy_oracle"] =
          Json{{"bound", bound}, {"step", q.q}, {"found", syz.size()}};
    }
  } else if (command == "verify-family") {
    auto fam = to_family(def, flags.p, flags.k);
    if (!fam)
      throw ValidationError("verify-family needs a family block");
    PrimePower q = flag_q(flags);
    FamilyVerification fv = verify_family_theorem(*fam, q);
    result["q_bound_ok"] = fv.q_bound_ok;
    result["closed_form_agrees"] = fv.closed_form_agrees;
    Json preds = Json::array();
    for (const auto& p : fv.predictions) {
      Json pj;
      pj["uexp"] = expo_json(p.ubody);
      pj["ydigits"] = expo_json(p.ydigits);
      pj["matched_plain"] = p.matched_plain;
      pj["matched_associate"] = p.matched_associate;
      pj["matched_index"] = p.matched_index;
      preds.push_back(pj);
    }
    result["predictions"] = preds;
    Json eimi = Json::array();
    for (const auto& e : fv.eimi)
      eimi.push_back(Json{{"i", e.i},
                          {"same_cyclic", e.same_cyclic},
                          {"plain_equal", e.plain_equal}});
    result["cross_identities"] = eimi;
    result["generator_count"] = fv.sm.generators.size();
  } else if (command == "annihilate") {
    auto bd = to_bipartite(def, flags.p, flags.k);
    if (!bd) throw ValidationError("annihilate needs a bipartite definition");
    ToricPresentation pres = build_bipartite(*bd);
    PrimePower q = flag_q(flags);
    SaturationModule sm = saturation_generators(pres, q);
    auto pk = parametrization_kernel(*bd);
    bool ann = annihilator_check(sm, pk.generators, pres);
    result["annihilates"] = ann;
    Json kg = Json::array();
    for (const auto& g : pk.generators) {
      std::string s = pres.to_string(g.lead);
      if (g.tail) s += " + " + pres.to_string(*g.tail);
      kg.push_back(s);
    }
    result["kernel_generators"] = kg;
    result["saturation_complete"] = pk.saturation_complete;
  } else if (command == "normalize" || command == "fintegral" ||
             command == "powint") {
    AffineSemigroup g = to_semigroup(def, flags.p);
    result["semigroup"] = gens_json(g.gens());
    if (command == "normalize") {
      auto res = normalization(g);
      result["generators"] = gens_json(res.gens);
    } else if (command == "fintegral") {
      long long p = flags.p.value_or(def.p);
      if (p < 2) throw ValidationError("fintegral requires --p");
      auto fn = f_normalization(g, p);
      result["p"] = p;
      result["stable_q"] = fn.stable_q;
      result["generators"] = gens_json(fn.closure.gens);
      auto norm = normalization(g);
      result["normalization"] = gens_json(norm.gens);
      AffineSemigroup fng(g.rank(), fn.closure.gens);
      result["equals_normalization"] = semigroup_subset(norm.gens, fng);
    } else {
      auto res = power_integral(g, flags.bound, flags.multiple_bound);
      result["generators"] = gens_json(res.gens);
      result["multiple_bound"] = res.multiple_bound;
    }
  } else if (command == "witt-check") {
    ToricPresentation pres = to_presentation(def, flags.p, flags.k);
    long long trunc = flags.trunc > 0 ? flags.trunc : default_trunc(pres);
    WittCheckReport rep =
        witt_transform_check(pres, trunc, flags.allow_any_scalar);
    result["truncation"] = rep.truncation;
    result["all_pass"] = rep.all_pass;
    Json rels = Json::array();
    for (const auto& r : rep.relations)
      rels.push_back(Json{{"relation", r.relation}, {"pass", r.pass}});
    result["relations"] = rels;
  } else if (command == "chi") {
    if (flags.vars.empty())
      throw ValidationError("chi requires --vars");
    const FqField* F = FqField::get(flags.p.value_or(def.p ? def.p : 2),
                                    flags.k.value_or(1));
    auto A = parse_ideal(flags.ideal_a, flags.vars, F);
    auto B = parse_ideal(flags.ideal_b, flags.vars, F);
    long long tl = tensor_length(A, B, F, int(flags.vars.size()));
    result["tensor_length"] = tl;
    long long lm = flags.len_m.value_or(1);
    long long ln = flags.len_n.value_or(1);
    if (flags.rank && flags.fracdeg) {
      auto loc = localization_length_free_mcm(*flags.rank, *flags.fracdeg);
      result["localization_length"] = loc.value.get_str();
      if (!loc.integral) result["localization_length_integral"] = false;
      if (loc.integral) ln = loc.value.get_num().get_si();
    }
    auto chi = chi_from_mcm_lengths(tl, lm, ln);
    result["len_m"] = lm;
    result["len_n"] = ln;
    result["chi"] = chi.value.get_str();
    result["integral"] = chi.integral;
  } else {
    throw ValidationError("unknown command '" + command + "'");
  }

  j["result"] = result;
  if (flags.timing) {
    auto t1 = std::chrono::steady_clock::now();
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  }
  return out;
}

}  // namespace toricmcm
