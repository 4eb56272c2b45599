#include "toricmcm/fintegral.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "toricmcm/errors.hpp"

namespace toricmcm {

namespace {

constexpr long long kComboCap = 1'000'000;
constexpr long long kVolumeCap = 20'000'000;

long long to_ll(const ZZ& z) {
  if (!z.fits_slong_p()) throw OverflowError("lattice entry out of range");
  return z.get_si();
}

long long inf_norm(const Expo& e) {
  long long m = 0;
  for (auto x : e) m = std::max(m, std::llabs(x));
  return m;
}

}  // namespace

AffineSemigroup::AffineSemigroup(int rank, std::vector<Expo> gens)
    : e_(rank), gens_(std::move(gens)) {
  if (e_ < 1) throw ValidationError("semigroup rank must be positive");
  ZMat rows;
  for (const auto& g : gens_) {
    if (int(g.size()) != e_)
      throw ValidationError("generator length mismatch");
    bool nonzero = false, nonneg = true;
    for (auto x : g) {
      if (x != 0) nonzero = true;
      if (x < 0) nonneg = false;
    }
    if (!nonzero || !nonneg)
      throw ValidationError("generators must be nonzero and nonnegative");
    ZVec r;
    for (auto x : g) r.push_back(zz(x));
    rows.push_back(r);
  }
  hull_ = hnf_rows(rows);

  axis_.assign(e_, 0);
  for (size_t gi = 0; gi < gens_.size(); ++gi) {
    int support = 0, var = -1;
    for (int i = 0; i < e_; ++i)
      if (gens_[gi][i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (axis_[var] == 0 || gens_[gi][var] < axis_[var]))
      axis_[var] = gens_[gi][var];
  }
  bool axes_ok = true;
  for (int i = 0; i < e_; ++i)
    if (axis_[i] == 0) axes_ok = false;
  if (axes_ok) {
    long long combos = 1;
    for (size_t gi = 0; gi < gens_.size() && combos <= kComboCap; ++gi) {
      int support = 0;
      for (int i = 0; i < e_; ++i)
        if (gens_[gi][i] > 0) ++support;
      if (support <= 1) continue;
      long long period = 1;
      for (int i = 0; i < e_; ++i) {
        if (gens_[gi][i] == 0) continue;
        long long g = std::gcd(axis_[i], gens_[gi][i]);
        period = std::lcm(period, axis_[i] / g);
      }
      free_gens_.push_back(int(gi));
      free_period_.push_back(period);
      combos = checked_mul(combos, period);
    }
    fast_path_ = combos <= kComboCap;
    if (!fast_path_) {
      free_gens_.clear();
      free_period_.clear();
    }
  }

  // facets of the rational cone, when full-dimensional: candidate normals
  // from (e-1)-subsets of generators, kept when all generators lie weakly on
  // one side
  if (zrank(hull_) == e_) {
    std::set<std::vector<long long>> seen;
    std::vector<int> comb;
    std::function<void(size_t, int)> rec = [&](size_t start, int need) {
      if (need == 0) {
        ZMat sub;
        for (int i : comb) {
          ZVec r;
          for (auto x : gens_[i]) r.push_back(zz(x));
          sub.push_back(r);
        }
        for (const auto& nv : integer_kernel(sub)) {
          // orient: every generator on the nonnegative side
          long long pos = 0, neg = 0;
          std::vector<long long> normal(e_);
          for (int i = 0; i < e_; ++i) normal[i] = to_ll(nv[i]);
          for (const auto& g : gens_) {
            long long dp = 0;
            for (int i = 0; i < e_; ++i) dp += normal[i] * g[i];
            if (dp > 0) ++pos;
            if (dp < 0) ++neg;
          }
          if (pos && neg) continue;
          if (neg)
            for (auto& x : normal) x = -x;
          if (!pos && !neg) continue;
          if (seen.insert(normal).second) {
            ZVec r;
            for (auto x : normal) r.push_back(zz(x));
            cone_facets_.push_back(r);
          }
        }
        return;
      }
      for (size_t i = start; i < gens_.size(); ++i) {
        comb.push_back(int(i));
        rec(i + 1, need - 1);
        comb.pop_back();
      }
    };
    if (e_ == 1) {
      cone_facets_.push_back(ZVec{ZZ(1)});
    } else {
      rec(0, e_ - 1);
    }
  }
}

ZZ AffineSemigroup::hull_index() const {
  return lattice_index_in_ambient(hull_);
}

bool AffineSemigroup::in_hull(const Expo& point) const {
  ZVec v;
  for (auto x : point) v.push_back(zz(x));
  return in_lattice(hull_, v);
}

bool AffineSemigroup::in_cone(const Expo& point) const {
  if (cone_facets_.empty())
    return true;  // conservative: only used as a pre-filter
  for (const auto& f : cone_facets_) {
    ZZ dp(0);
    for (int i = 0; i < e_; ++i) dp += f[i] * zz(point[i]);
    if (dp < 0) return false;
  }
  return true;
}

bool AffineSemigroup::contains(const Expo& point) const {
  for (auto x : point)
    if (x < 0) return false;
  if (!in_hull(point)) return false;
  if (fast_path_) {
    size_t k = free_gens_.size();
    std::vector<long long> idx(k, 0);
    while (true) {
      Expo rest = point;
      bool feasible = true;
      for (size_t t = 0; t < k && feasible; ++t) {
        const Expo& g = gens_[free_gens_[t]];
        for (int i = 0; i < e_; ++i) {
          rest[i] -= idx[t] * g[i];
          if (rest[i] < 0) feasible = false;
        }
      }
      if (feasible) {
        bool ok = true;
        for (int i = 0; i < e_ && ok; ++i)
          if (rest[i] % axis_[i] != 0) ok = false;
        if (ok) return true;
      }
      // odometer
      size_t pos = 0;
      while (pos < k) {
        if (++idx[pos] < free_period_[pos]) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
      if (k == 0) break;
    }
    return false;
  }
  return dfs_member(point, 0);
}

bool AffineSemigroup::dfs_member(Expo rest, size_t idx) const {
  bool zero = true;
  for (auto x : rest)
    if (x != 0) zero = false;
  if (zero) return true;
  if (idx >= gens_.size()) return false;
  if (!in_hull(rest)) return false;
  const Expo& g = gens_[idx];
  long long maxc = -1;
  for (int i = 0; i < e_; ++i)
    if (g[i] > 0) {
      long long c = rest[i] / g[i];
      maxc = maxc < 0 ? c : std::min(maxc, c);
    }
  for (long long c = maxc; c >= 0; --c) {
    Expo r2 = rest;
    for (int i = 0; i < e_; ++i) r2[i] -= c * g[i];
    if (dfs_member(r2, idx + 1)) return true;
  }
  return false;
}

namespace {

// enumerate lattice points of the hull inside [0, box] intersected with the
// cone; calls visit(point) for every nonzero candidate
void enumerate_candidates(const AffineSemigroup& g, const Expo& box,
                          const std::function<void(const Expo&)>& visit) {
  int e = g.rank();
  long long volume = 1;
  for (auto b : box) volume = checked_mul(volume, b + 1);
  if (volume > kVolumeCap)
    throw BoundExceededError("candidate box too large: " +
                             std::to_string(volume));
  Expo idx(e, 0);
  while (true) {
    bool zero = true;
    for (auto x : idx)
      if (x != 0) zero = false;
    if (!zero && g.in_cone(idx) && g.in_hull(idx)) visit(idx);
    int pos = e - 1;
    while (pos >= 0) {
      if (++idx[pos] <= box[pos]) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

std::vector<Expo> minimal_generators(std::vector<Expo> pool) {
  std::sort(pool.begin(), pool.end());
  std::set<Expo> inpool(pool.begin(), pool.end());
  std::vector<Expo> out;
  for (const auto& x : pool) {
    bool decomposable = false;
    for (const auto& y : pool) {
      if (y == x) continue;
      bool le = true, lt = false;
      Expo diff(x.size());
      for (size_t i = 0; i < x.size(); ++i) {
        diff[i] = x[i] - y[i];
        if (diff[i] < 0) le = false;
        if (diff[i] > 0) lt = true;
      }
      if (!le || !lt) continue;
      if (inpool.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

}  // namespace

ClosureResult normalization(const AffineSemigroup& g) {
  if (zrank(g.group_hull()) != g.rank())
    throw BoundExceededError(
        "normalization implemented for full-dimensional semigroups only");
  Expo box(g.rank(), 0);
  for (const auto& gen : g.gens())
    for (int i = 0; i < g.rank(); ++i) box[i] += gen[i];
  std::vector<Expo> pool;
  enumerate_candidates(g, box, [&](const Expo& x) { pool.push_back(x); });
  ClosureResult out;
  out.gens = minimal_generators(pool);
  out.bound_used = inf_norm(box);
  return out;
}

ClosureResult q_integral_closure(const AffineSemigroup& g, long long q,
                                 long long bound) {
  if (q < 2) throw ValidationError("q must be at least 2");
  if (bound <= 0) {
    for (const auto& gen : g.gens()) bound = std::max(bound, inf_norm(gen));
    bound *= 10;
  }
  Expo box(g.rank(), bound);
  std::vector<Expo> pool;
  enumerate_candidates(g, box, [&](const Expo& x) {
    Expo qx(x.size());
    for (size_t i = 0; i < x.size(); ++i) qx[i] = checked_mul(q, x[i]);
    if (g.contains(qx)) pool.push_back(x);
  });
  ClosureResult out;
  out.gens = minimal_generators(pool);
  out.bound_used = bound;
  return out;
}

FNormalization f_normalization(const AffineSemigroup& g, long long p,
                               int max_steps) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  long long q = p;
  ClosureResult prev = q_integral_closure(g, q);
  for (int step = 1; step < max_steps; ++step) {
    long long qn = checked_mul(q, p);
    ClosureResult next = q_integral_closure(g, qn);
    AffineSemigroup sprev(g.rank(), prev.gens);
    if (semigroup_subset(next.gens, sprev))
      return FNormalization{prev, q};
    prev = next;
    q = qn;
  }
  throw BoundExceededError("F-normalization chain did not stabilize within " +
                           std::to_string(max_steps) + " steps");
}

PowerIntegralResult power_integral(const AffineSemigroup& g, long long bound,
                                   long long multiple_bound) {
  if (bound <= 0) {
    for (const auto& gen : g.gens()) bound = std::max(bound, inf_norm(gen));
    bound *= 10;
  }
  Expo box(g.rank(), bound);
  std::vector<Expo> pool;
  enumerate_candidates(g, box, [&](const Expo& x) {
    long long gcd_members = 0;
    for (long long m = 1; m <= multiple_bound; ++m) {
      Expo mx(x.size());
      for (size_t i = 0; i < x.size(); ++i) mx[i] = checked_mul(m, x[i]);
      if (g.contains(mx)) {
        gcd_members = std::gcd(gcd_members, m);
        if (gcd_members == 1) break;
      }
    }
    if (gcd_members == 1) pool.push_back(x);
  });
  PowerIntegralResult out;
  out.gens = minimal_generators(pool);
  out.multiple_bound = multiple_bound;
  return out;
}

ZZ frac_degree(const AffineSemigroup& g, const AffineSemigroup& base) {
  if (g.rank() != base.rank())
    throw InfiniteIndexError("ambient ranks differ");
  for (const auto& row : base.group_hull()) {
    if (!in_lattice(g.group_hull(), row))
      throw InfiniteIndexError("base hull is not contained in the hull");
  }
  ZZ ig, ib;
  try {
    ig = lattice_index_in_ambient(g.group_hull());
    ib = lattice_index_in_ambient(base.group_hull());
  } catch (const InfiniteIndexError&) {
    throw InfiniteIndexError("hulls are not of full rank");
  }
  if (ib % ig != 0)
    throw InfiniteIndexError("index is not integral");
  return ib / ig;
}

bool semigroup_subset(const std::vector<Expo>& sub_gens,
                      const AffineSemigroup& super) {
  for (const auto& g : sub_gens)
    if (!super.contains(g)) return false;
  return true;
}

}  // namespace toricmcm
