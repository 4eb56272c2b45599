#include "toricmcm/ringdef.hpp"

#include <algorithm>
#include <sstream>

#include "toricmcm/errors.hpp"

namespace toricmcm {

namespace {

struct Cursor {
  int line = 0;
  int col = 0;
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
  throw ParseError(msg + " (line " + std::to_string(c.line) + ", column " +
                       std::to_string(c.col) + ")",
                   c.line, c.col);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

long long parse_int(const std::string& t, const Cursor& c) {
  try {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) fail(c, "malformed integer '" + t + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(c, "malformed integer '" + t + "'");
  }
}

Expo parse_tuple(const std::string& t, const Cursor& c) {
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(c, "expected a tuple like (1,2,3), got '" + t + "'");
  Expo out;
  std::string body = t.substr(1, t.size() - 2);
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      out.push_back(parse_int(cur, c));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(parse_int(cur, c));
  if (out.empty()) fail(c, "empty tuple");
  return out;
}

std::pair<long long, long long> parse_fraction(const std::string& t,
                                               const Cursor& c) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return {parse_int(t, c), 1};
  long long num = parse_int(t.substr(0, slash), c);
  long long den = parse_int(t.substr(slash + 1), c);
  if (den <= 0) fail(c, "fraction denominator must be positive");
  return {num, den};
}

std::vector<std::pair<long long, long long>> parse_fraction_tuple(
    const std::string& t, const Cursor& c) {
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(c, "expected a tuple like (1/3,2/3,1)");
  std::vector<std::pair<long long, long long>> out;
  std::string body = t.substr(1, t.size() - 2);
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      out.push_back(parse_fraction(cur, c));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(parse_fraction(cur, c));
  return out;
}

// one side of a relation: [int] (name[^int])*
void parse_side(const std::vector<std::string>& toks, size_t from, size_t to,
                long long& coeff,
                std::vector<std::pair<std::string, long long>>& monos,
                const Cursor& c) {
  coeff = 1;
  size_t i = from;
  if (i < to && (isdigit(toks[i][0]) || toks[i][0] == '-')) {
    coeff = parse_int(toks[i], c);
    ++i;
  }
  for (; i < to; ++i) {
    const std::string& t = toks[i];
    auto caret = t.find('^');
    std::string name = caret == std::string::npos ? t : t.substr(0, caret);
    long long e = caret == std::string::npos
                      ? 1
                      : parse_int(t.substr(caret + 1), c);
    if (name.empty() || e < 0) fail(c, "malformed monomial token '" + t + "'");
    monos.push_back({name, e});
  }
}

}  // namespace

RingDefinitionFile parse_ring(const std::string& text) {
  RingDefinitionFile def;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  Cursor cur;
  bool saw_ring = false;
  while (std::getline(in, raw)) {
    ++cur.line;
    cur.col = 1;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "ring" || head == "relations" || head == "bipartite" ||
        head == "family" || head == "semigroup") {
      section = head;
      if (head == "ring") saw_ring = true;
      if (head == "bipartite") def.bipartite.emplace();
      if (head == "family") def.family.emplace();
      if (head == "semigroup") def.semigroup.emplace();
      if (toks.size() > 1) fail(cur, "unexpected token after section name");
      continue;
    }
    if (section == "ring") {
      if (head == "p" && toks.size() == 2)
        def.p = parse_int(toks[1], cur);
      else if (head == "k" && toks.size() == 2)
        def.k = int(parse_int(toks[1], cur));
      else if (head == "yvars")
        def.ynames.assign(toks.begin() + 1, toks.end());
      else if (head == "uvars")
        def.unames.assign(toks.begin() + 1, toks.end());
      else
        fail(cur, "unknown ring header entry '" + head + "'");
    } else if (section == "relations") {
      auto eq = std::find(toks.begin(), toks.end(), "=");
      if (eq == toks.end()) fail(cur, "relation needs '='");
      ParsedRelation r;
      size_t at = size_t(eq - toks.begin());
      parse_side(toks, 0, at, r.lhs_coeff, r.lhs, cur);
      parse_side(toks, at + 1, toks.size(), r.rhs_coeff, r.rhs, cur);
      if (r.lhs.empty() && r.rhs.empty())
        fail(cur, "empty relation");
      def.relations.push_back(r);
    } else if (section == "bipartite") {
      if (head == "gamma")
        for (size_t i = 1; i < toks.size(); ++i)
          def.bipartite->gamma.push_back(parse_tuple(toks[i], cur));
      else if (head == "phi")
        for (size_t i = 1; i < toks.size(); ++i)
          def.bipartite->phi.push_back(parse_fraction_tuple(toks[i], cur));
      else if (head == "chi")
        for (size_t i = 1; i < toks.size(); ++i)
          def.bipartite->chi.push_back(parse_int(toks[i], cur));
      else
        fail(cur, "unknown bipartite entry '" + head + "'");
    } else if (section == "family") {
      if (head == "m" && toks.size() == 2)
        def.family->m = parse_int(toks[1], cur);
      else if (head == "alpha")
        for (size_t i = 1; i < toks.size(); ++i)
          def.family->alpha.push_back(parse_tuple(toks[i], cur));
      else if (head == "beta")
        for (size_t i = 1; i < toks.size(); ++i)
          def.family->beta.push_back(parse_tuple(toks[i], cur));
      else if (head == "a")
        for (size_t i = 1; i < toks.size(); ++i)
          def.family->a.push_back(parse_int(toks[i], cur));
      else if (head == "b" || head == "c")
        for (size_t i = 1; i < toks.size(); ++i)
          def.family->b.push_back(parse_int(toks[i], cur));
      else
        fail(cur, "unknown family entry '" + head + "'");
    } else if (section == "semigroup") {
      if (head == "rank" && toks.size() == 2)
        def.semigroup->rank = int(parse_int(toks[1], cur));
      else if (head == "gens")
        for (size_t i = 1; i < toks.size(); ++i)
          def.semigroup->gens.push_back(parse_tuple(toks[i], cur));
      else
        fail(cur, "unknown semigroup entry '" + head + "'");
    } else {
      fail(cur, "content before any section header");
    }
  }
  if (!saw_ring && !def.semigroup)
    throw ParseError("missing 'ring' section", 1, 1);
  if (saw_ring && def.p < 2)
    throw ParseError("ring header must set a prime p", 1, 1);
  return def;
}

namespace {

std::string tuple_str(const Expo& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string side_str(long long coeff,
                     const std::vector<std::pair<std::string, long long>>& m) {
  std::string s;
  if (coeff != 1 || m.empty()) s = std::to_string(coeff);
  for (const auto& [name, e] : m) {
    if (!s.empty()) s += " ";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string serialize_ring(const RingDefinitionFile& def) {
  std::string out;
  if (def.p >= 2) {
    out += "ring\n";
    out += "  p " + std::to_string(def.p) + "\n";
    out += "  k " + std::to_string(def.k) + "\n";
    if (!def.ynames.empty()) {
      out += "  yvars";
      for (const auto& n : def.ynames) out += " " + n;
      out += "\n";
    }
    if (!def.unames.empty()) {
      out += "  uvars";
      for (const auto& n : def.unames) out += " " + n;
      out += "\n";
    }
  }
  if (!def.relations.empty()) {
    out += "relations\n";
    for (const auto& r : def.relations)
      out += "  " + side_str(r.lhs_coeff, r.lhs) + " = " +
             side_str(r.rhs_coeff, r.rhs) + "\n";
  }
  if (def.bipartite) {
    out += "bipartite\n  gamma";
    for (const auto& g : def.bipartite->gamma) out += " " + tuple_str(g);
    out += "\n  phi";
    for (const auto& row : def.bipartite->phi) {
      out += " (";
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(row[i].first);
        if (row[i].second != 1) out += "/" + std::to_string(row[i].second);
      }
      out += ")";
    }
    out += "\n";
    if (!def.bipartite->chi.empty()) {
      out += "  chi";
      for (auto v : def.bipartite->chi) out += " " + std::to_string(v);
      out += "\n";
    }
  }
  if (def.family) {
    out += "family\n  m " + std::to_string(def.family->m) + "\n  alpha";
    for (const auto& a : def.family->alpha) out += " " + tuple_str(a);
    out += "\n  beta";
    for (const auto& b : def.family->beta) out += " " + tuple_str(b);
    out += "\n  a";
    for (auto v : def.family->a) out += " " + std::to_string(v);
    out += "\n  b";
    for (auto v : def.family->b) out += " " + std::to_string(v);
    out += "\n";
  }
  if (def.semigroup) {
    out += "semigroup\n  rank " + std::to_string(def.semigroup->rank) +
           "\n  gens";
    for (const auto& g : def.semigroup->gens) out += " " + tuple_str(g);
    out += "\n";
  }
  return out;
}

RingDefinitionFile preset(const std::string& name) {
  if (name == "e3") {
    return parse_ring(
        "ring\n"
        "  p 7\n"
        "  k 1\n"
        "  yvars x y z\n"
        "  uvars u v\n"
        "bipartite\n"
        "  gamma (3,0) (1,1) (0,3)\n"
        "  phi (1/3,2/3,1) (5/3,1/3,2)\n"
        "  chi 1 1 1\n");
  }
  if (name == "genfam") {
    return parse_ring(
        "ring\n"
        "  p 11\n"
        "  k 1\n"
        "  yvars x y z\n"
        "  uvars u v\n"
        "bipartite\n"
        "  gamma (2,0) (1,3) (0,6)\n"
        "  phi (1/2,1,2) (5/6,1,1/3)\n"
        "  chi 1 1 1\n");
  }
  throw ValidationError("unknown preset '" + name + "'");
}

namespace {

const FqField* field_of(const RingDefinitionFile& def,
                        std::optional<long long> p_override,
                        std::optional<int> k_override) {
  long long p = p_override.value_or(def.p);
  int k = k_override.value_or(def.k);
  return FqField::get(p, k);
}

int var_index(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : int(it - names.begin());
}

}  // namespace

std::optional<BipartiteData> to_bipartite(const RingDefinitionFile& def,
                                          std::optional<long long> p_override,
                                          std::optional<int> k_override) {
  if (!def.bipartite) return std::nullopt;
  const FqField* F = field_of(def, p_override, k_override);
  BipartiteData data;
  data.field = F;
  data.ynames = def.ynames;
  data.unames = def.unames;
  data.gamma.n = def.bipartite->gamma.empty()
                     ? 0
                     : int(def.bipartite->gamma[0].size());
  data.gamma.gens = def.bipartite->gamma;
  for (const auto& row : def.bipartite->phi) {
    std::vector<QQ> r;
    for (const auto& [num, den] : row) {
      QQ q{long(num), long(den)};
      q.canonicalize();
      r.push_back(q);
    }
    data.phi.rows.push_back(r);
  }
  if (def.bipartite->chi.empty()) {
    data.chi = data.trivial_character();
  } else {
    for (auto v : def.bipartite->chi)
      data.chi.values.push_back(Fq{F, F->from_int(v)});
  }
  if (data.chi.values.size() != data.gamma.gens.size())
    throw ValidationError("chi value count must match the generator count");
  return data;
}

std::optional<FamilyTParams> to_family(const RingDefinitionFile& def,
                                       std::optional<long long> p_override,
                                       std::optional<int> k_override) {
  if (!def.family) return std::nullopt;
  const FqField* F = field_of(def, p_override, k_override);
  const FamilySpec& fs = *def.family;
  FamilyTParams params;
  params.field = F;
  params.ynames = def.ynames;
  params.unames = def.unames;
  params.m = fs.m;
  params.n = int(fs.alpha.size());
  params.d = fs.alpha.empty() ? 0 : int(fs.alpha[0].size());
  params.alpha = fs.alpha;
  for (auto v : fs.a) params.a.push_back(Fq{F, F->from_int(v)});
  params.beta.assign(params.n, std::vector<Expo>(params.n));
  params.b.assign(params.n, std::vector<Fq>(params.n, Fq{F, 0}));
  if (fs.m == 2) {
    size_t at = 0;
    for (int i = 0; i < params.n; ++i)
      for (int j = i + 1; j < params.n; ++j) {
        if (at >= fs.beta.size() || at >= fs.b.size())
          throw ValidationError("family beta/b lists too short");
        params.beta[i][j] = fs.beta[at];
        params.b[i][j] = Fq{F, F->from_int(fs.b[at])};
        ++at;
      }
  } else {
    if (fs.beta.size() != 1 || fs.b.size() != 1)
      throw ValidationError("odd-m family takes one beta tuple and one c");
    params.beta[0][0] = fs.beta[0];
    params.b[0][0] = Fq{F, F->from_int(fs.b[0])};
  }
  return params;
}

ToricPresentation to_presentation(const RingDefinitionFile& def,
                                  std::optional<long long> p_override,
                                  std::optional<int> k_override) {
  if (auto bd = to_bipartite(def, p_override, k_override))
    return build_bipartite(*bd);
  if (auto fp = to_family(def, p_override, k_override))
    return build_family_T(*fp);
  const FqField* F = field_of(def, p_override, k_override);
  int d = int(def.ynames.size()), n = int(def.unames.size());
  std::vector<BinomialElement> rels;
  for (const auto& r : def.relations) {
    auto side = [&](long long coeff,
                    const std::vector<std::pair<std::string, long long>>& m)
        -> Monomial {
      Monomial mono{Fq{F, F->from_int(coeff)}, Expo(n, 0), Expo(d, 0)};
      for (const auto& [name, e] : m) {
        int ui = var_index(def.unames, name);
        int yi = var_index(def.ynames, name);
        if (ui >= 0)
          mono.ue[ui] += e;
        else if (yi >= 0)
          mono.ye[yi] += e;
        else
          throw ValidationError("unknown variable '" + name + "'");
      }
      return mono;
    };
    Monomial lead = side(r.lhs_coeff, r.lhs);
    Monomial tail = side(r.rhs_coeff, r.rhs);
    tail.coeff = -tail.coeff;
    if (tail.coeff.is_zero())
      rels.push_back({lead, std::nullopt});
    else
      rels.push_back({lead, tail});
  }
  return ToricPresentation(F, d, n, rels, MonomialOrder{}, def.ynames,
                           def.unames);
}

AffineSemigroup to_semigroup(const RingDefinitionFile& def,
                             std::optional<long long> p_override) {
  if (def.semigroup)
    return AffineSemigroup(def.semigroup->rank, def.semigroup->gens);
  auto bd = to_bipartite(def, p_override, {});
  if (!bd)
    throw ValidationError(
        "closure commands need a semigroup block or a bipartite definition");
  auto pk = parametrization_kernel(*bd);
  std::vector<Expo> gens = pk.y_images;
  gens.insert(gens.end(), pk.u_images.begin(), pk.u_images.end());
  return AffineSemigroup(int(pk.y_images[0].size()), gens);
}

std::vector<BinomialElement> parse_ideal(const std::vector<std::string>& lines,
                                         const std::vector<std::string>& vars,
                                         const FqField* field) {
  std::string text = "ring\n  p " + std::to_string(field->p()) + "\n  yvars";
  for (const auto& v : vars) text += " " + v;
  text += "\nrelations\n";
  for (const auto& l : lines) {
    // pure monomial generators are written without '='
    if (l.find('=') == std::string::npos)
      text += "  " + l + " = 0\n";
    else
      text += "  " + l + "\n";
  }
  RingDefinitionFile def = parse_ring(text);
  def.k = field->k();
  ToricPresentation pres = to_presentation(def);
  return pres.relations();
}

}  // namespace toricmcm
