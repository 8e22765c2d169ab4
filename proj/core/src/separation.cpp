#include "semient/separation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

#include "semient/error.hpp"

namespace semient {

const char* to_string(SeparationMode mode) {
  switch (mode) {
    case SeparationMode::DinhSibony: return "dinh_sibony";
    case SeparationMode::Friedland: return "friedland";
    case SeparationMode::PerWord: return "per_word";
  }
  return "unknown";
}

bool non_separated(const OrbitPool& pool, std::size_t a, std::size_t b, double eps, bool with_symbols) {
  const int nu = pool.nu();
  if (with_symbols) {
    const int* sa = pool.symbols_of(a);
    const int* sb = pool.symbols_of(b);
    for (int k = 0; k < nu; ++k)
      if (sa[k] != sb[k]) return false;
  }
  const ProjPoint* pa = pool.points_of(a);
  const ProjPoint* pb = pool.points_of(b);
  for (int k = 0; k <= nu; ++k)
    if (chordal_dist(pa[k], pb[k]) > eps) return false;
  return true;
}

namespace {

// Branch and bound: pick the lowest candidate v, branch on including v
// (dropping its neighbours) or excluding it.
void mis_search(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, std::uint64_t current,
                int size, int& best, std::uint64_t& best_set) {
  if (candidates == 0) {
    if (size > best) {
      best = size;
      best_set = current;
    }
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  const int v = std::countr_zero(candidates);
  const std::uint64_t bit = std::uint64_t{1} << v;
  mis_search(adj, candidates & ~bit & ~adj[v], current | bit, size + 1, best, best_set);
  // Excluding v only helps if some neighbour of v can join instead.
  if ((adj[v] & candidates) != 0) mis_search(adj, candidates & ~bit, current, size, best, best_set);
}

std::vector<std::uint64_t> conflict_graph(const OrbitPool& pool, const std::vector<std::size_t>& idx,
                                          double eps, bool with_symbols) {
  const std::size_t n = idx.size();
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (non_separated(pool, idx[i], idx[j], eps, with_symbols)) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
  return adj;
}

struct CellKey {
  std::uint64_t word;
  long a[6];
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::size_t h = k.word * 0x9E3779B97F4A7C15ull;
    for (long v : k.a) h ^= static_cast<std::size_t>(v) * 0xBF58476D1CE4E5B9ull + (h << 6) + (h >> 2);
    return h;
  }
};

std::uint64_t word_hash(const int* s, int nu) {
  std::uint64_t h = 1469598103934665603ull;
  for (int k = 0; k < nu; ++k) {
    h ^= static_cast<std::uint64_t>(s[k]) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

std::array<long, 3> cell_of(const double* sp, double cell) {
  return {static_cast<long>(std::floor(sp[0] / cell)), static_cast<long>(std::floor(sp[1] / cell)),
          static_cast<long>(std::floor(sp[2] / cell))};
}

// Sampled collision mass sum_b |b|^2 of the grid keyed on indices (k1, k2).
double collision_mass(const OrbitPool& pool, const std::vector<std::size_t>& idx, double cell, int k1, int k2) {
  const std::size_t step = std::max<std::size_t>(1, idx.size() / 20000);
  std::unordered_map<CellKey, std::size_t, CellHash> counts;
  for (std::size_t t = 0; t < idx.size(); t += step) {
    const auto s1 = pool.point(idx[t], k1).sphere();
    const auto s2 = pool.point(idx[t], k2).sphere();
    const auto c1 = cell_of(s1.data(), cell);
    const auto c2 = cell_of(s2.data(), cell);
    ++counts[CellKey{0, {c1[0], c1[1], c1[2], c2[0], c2[1], c2[2]}}];
  }
  double mass = 0;
  for (const auto& [key, n] : counts) mass += static_cast<double>(n) * static_cast<double>(n);
  return mass;
}

// Two orbit indices whose joint grid cells separate the pool best. Any
// indices are valid keys since non-separated orbits are close everywhere.
std::pair<int, int> grid_indices(const OrbitPool& pool, const std::vector<std::size_t>& idx, double cell) {
  int k1 = 0;
  double best = collision_mass(pool, idx, cell, 0, 0);
  for (int k = 1; k <= pool.nu(); ++k)
    if (double m = collision_mass(pool, idx, cell, k, k); m < best) {
      best = m;
      k1 = k;
    }
  int k2 = k1;
  for (int k = 0; k <= pool.nu(); ++k)
    if (double m = collision_mass(pool, idx, cell, k1, k); m < 0.5 * best) {
      best = m;
      k2 = k;
    }
  return {k1, k2};
}

// Greedy maximal separated family in the order given by idx. Candidates
// for non-separation are found through a grid on (x_k1, x_k2): d(x, y) <= eps
// means Euclidean distance <= 2 eps on the sphere, so only neighbouring
// cells can hold a conflict. Each bucket keeps the sphere coordinates of its
// members contiguously; comparisons use squared Euclidean distance and
// defer to chordal_dist within 1e-12 of the threshold.
std::int64_t greedy_count(const OrbitPool& pool, const std::vector<std::size_t>& idx, double eps,
                          bool with_symbols) {
  const double cell = 2.0 * eps;
  const double thr = 4.0 * eps * eps;
  const int nu = pool.nu();
  const std::size_t stride = static_cast<std::size_t>(nu + 1) * 3;
  struct Bucket {
    std::vector<double> coords;
    std::vector<std::size_t> members;
  };
  std::unordered_map<CellKey, Bucket, CellHash> grid;
  // Occupied first-level cells, so absent ones skip the inner 27 lookups.
  std::unordered_map<CellKey, char, CellHash> occupied;
  grid.reserve(idx.size());
  std::vector<double> cand(stride);
  const auto [k1, k2] = grid_indices(pool, idx, cell);
  const bool two_level = k1 != k2;
  std::int64_t kept = 0;

  auto conflicts_in = [&](const Bucket& b, std::size_t i) {
    for (std::size_t m = 0; m < b.members.size(); ++m) {
      const double* other = b.coords.data() + m * stride;
      bool close = true;
      bool borderline = false;
      for (std::size_t k = 0; k < stride; k += 3) {
        const double ex = cand[k] - other[k];
        const double ey = cand[k + 1] - other[k + 1];
        const double ez = cand[k + 2] - other[k + 2];
        const double d2 = ex * ex + ey * ey + ez * ez;
        if (d2 > thr + 1e-12) {
          close = false;
          break;
        }
        if (d2 > thr - 1e-12) borderline = true;
      }
      if (!close) continue;
      if (!(borderline || with_symbols) || non_separated(pool, i, b.members[m], eps, with_symbols)) return true;
    }
    return false;
  };

  for (std::size_t i : idx) {
    const ProjPoint* pts = pool.points_of(i);
    for (int k = 0; k <= nu; ++k) {
      const auto sp = pts[k].sphere();
      cand[3 * k] = sp[0];
      cand[3 * k + 1] = sp[1];
      cand[3 * k + 2] = sp[2];
    }
    const auto c1 = cell_of(&cand[3 * k1], cell);
    const auto c2 = cell_of(&cand[3 * k2], cell);
    const std::uint64_t wh = with_symbols ? word_hash(pool.symbols_of(i), nu) : 0;
    bool blocked = false;
    for (int o1 = 0; o1 < 27 && !blocked; ++o1) {
      const long a0 = c1[0] + o1 % 3 - 1, a1 = c1[1] + (o1 / 3) % 3 - 1, a2 = c1[2] + o1 / 9 - 1;
      if (two_level && !occupied.count(CellKey{wh, {a0, a1, a2, 0, 0, 0}})) continue;
      const int inner = two_level ? 27 : 1;
      for (int o2 = 0; o2 < inner && !blocked; ++o2) {
        const CellKey key = two_level
                                ? CellKey{wh, {a0, a1, a2, c2[0] + o2 % 3 - 1, c2[1] + (o2 / 3) % 3 - 1, c2[2] + o2 / 9 - 1}}
                                : CellKey{wh, {a0, a1, a2, 0, 0, 0}};
        auto it = grid.find(key);
        if (it != grid.end()) blocked = conflicts_in(it->second, i);
      }
    }
    if (blocked) continue;
    const CellKey own = two_level ? CellKey{wh, {c1[0], c1[1], c1[2], c2[0], c2[1], c2[2]}}
                                  : CellKey{wh, {c1[0], c1[1], c1[2], 0, 0, 0}};
    if (two_level) occupied.emplace(CellKey{wh, {c1[0], c1[1], c1[2], 0, 0, 0}}, 0);
    Bucket& b = grid[own];
    b.coords.insert(b.coords.end(), cand.begin(), cand.end());
    b.members.push_back(i);
    ++kept;
  }
  return kept;
}

void check_eps(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::SchemaViolation, "epsilon must be positive");
}

}  // namespace

int max_independent_set(const std::vector<std::uint64_t>& adjacency, std::uint64_t* chosen) {
  const std::size_t n = adjacency.size();
  if (n > 64) throw Error(ErrorCode::BudgetExceeded, "exact independent set limited to 64 vertices");
  if (n == 0) {
    if (chosen) *chosen = 0;
    return 0;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  int best = 0;
  std::uint64_t best_set = 0;
  mis_search(adjacency, all, 0, 0, best, best_set);
  if (chosen) *chosen = best_set;
  return best;
}

SeparationCount count_separated(const OrbitPool& pool, double eps, SeparationMode mode,
                                const std::vector<int>& word, const CountOptions& opt) {
  check_eps(eps);
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "cannot count an empty pool");
  SeparationCount out;
  out.epsilon = eps;
  out.nu = pool.nu();
  out.mode = mode;
  std::vector<std::size_t> idx;
  if (mode == SeparationMode::PerWord) {
    if (static_cast<int>(word.size()) != pool.nu())
      throw Error(ErrorCode::MixedNu, "word length differs from pool length");
    out.word = word;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (std::equal(word.begin(), word.end(), pool.symbols_of(i))) idx.push_back(i);
  } else {
    idx.resize(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  }
  out.pool_size = static_cast<std::int64_t>(idx.size());
  const bool with_symbols = mode == SeparationMode::DinhSibony;
  const std::size_t limit = std::min<std::size_t>(opt.exact_limit, 64);
  if (idx.size() <= limit) {
    out.count = max_independent_set(conflict_graph(pool, idx, eps, with_symbols));
    out.exact = true;
  } else {
    out.count = greedy_count(pool, idx, eps, with_symbols);
    out.exact = false;
  }
  return out;
}

SeparationCount count_separated(const std::vector<NuOrbit>& pool, double eps, SeparationMode mode,
                                const std::vector<int>& word, const CountOptions& opt) {
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "cannot count an empty pool");
  for (const auto& o : pool)
    if (o.nu() != pool.front().nu()) throw Error(ErrorCode::MixedNu, "orbits of different length");
  return count_separated(make_pool(pool), eps, mode, word, opt);
}

SumUpResult sum_up_partition(const OrbitPool& pool, double eps, const CountOptions& opt) {
  check_eps(eps);
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "cannot count an empty pool");
  SumUpResult out;
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pool.size(); ++i)
    groups[std::vector<int>(pool.symbols_of(i), pool.symbols_of(i) + pool.nu())].push_back(i);
  const std::size_t limit = std::min<std::size_t>(opt.exact_limit, 64);
  out.exact = pool.size() <= limit;
  for (const auto& [w, idx] : groups) {
    out.words.push_back(w);
    const std::int64_t n = idx.size() <= limit
                               ? max_independent_set(conflict_graph(pool, idx, eps, false))
                               : greedy_count(pool, idx, eps, false);
    out.per_word.push_back(n);
    out.per_word_sum += n;
  }
  std::vector<std::size_t> all(pool.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  out.joint = out.exact ? max_independent_set(conflict_graph(pool, all, eps, true))
                        : greedy_count(pool, all, eps, true);
  out.identity_holds = out.per_word_sum == out.joint;
  return out;
}

SeparationCount count_bowen_separated(const OrbitPool& paths, double eps, int n, const CountOptions& opt) {
  check_eps(eps);
  if (paths.empty()) throw Error(ErrorCode::EmptyPool, "cannot count an empty pool");
  SeparationCount out;
  out.epsilon = eps;
  out.nu = n;
  out.mode = SeparationMode::DinhSibony;
  out.pool_size = static_cast<std::int64_t>(paths.size());
  const std::size_t limit = std::min<std::size_t>(opt.exact_limit, 64);
  if (paths.size() <= limit) {
    std::vector<std::uint64_t> adj(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (std::size_t j = i + 1; j < paths.size(); ++j)
        if (!(bowen_delta(paths, i, j, n) > eps)) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
    out.count = max_independent_set(adj);
    out.exact = true;
  } else {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      bool ok = true;
      for (std::size_t j : kept)
        if (!(bowen_delta(paths, i, j, n) > eps)) {
          ok = false;
          break;
        }
      if (ok) kept.push_back(i);
    }
    out.count = static_cast<std::int64_t>(kept.size());
  }
  return out;
}

int separation_depth_constant(double eps) {
  check_eps(eps);
  return static_cast<int>(std::ceil(std::log2(1.0 / eps))) - 1;
}

SpanningResult spanning_number(const OrbitPool& paths, double eps, int n, const CountOptions& opt) {
  check_eps(eps);
  if (paths.empty()) throw Error(ErrorCode::EmptyPool, "cannot span an empty pool");
  if (n < 1 || n > paths.nu() + 1) throw Error(ErrorCode::DepthMismatch, "horizon outside path depth");
  const std::size_t size = paths.size();
  SpanningResult out;
  if (eps >= 1.0) {
    out.count = 1;
    out.exact = true;
    return out;
  }
  // covers[s]: elements shadowed by s for n steps.
  auto shadows = [&](std::size_t a, std::size_t b) { return !(bowen_delta(paths, a, b, n - 1) > eps); };
  if (size <= std::min<std::size_t>(opt.exact_limit, 20)) {
    std::vector<std::uint32_t> covers(size, 0);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        if (shadows(a, b)) covers[a] |= std::uint32_t{1} << b;
    const std::uint32_t full = size == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1;
    int best = static_cast<int>(size);
    for (std::uint32_t subset = 1; subset <= full && subset != 0; ++subset) {
      const int k = std::popcount(subset);
      if (k >= best) continue;
      std::uint32_t cov = 0;
      for (std::uint32_t rest = subset; rest; rest &= rest - 1) cov |= covers[std::countr_zero(rest)];
      if (cov == full) best = k;
    }
    out.count = best;
    out.exact = true;
    return out;
  }
  std::vector<bool> covered(size, false);
  std::size_t remaining = size;
  while (remaining > 0) {
    std::size_t best_s = 0, best_gain = 0;
    for (std::size_t s = 0; s < size; ++s) {
      std::size_t gain = 0;
      for (std::size_t b = 0; b < size; ++b)
        if (!covered[b] && shadows(s, b)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_s = s;
      }
    }
    for (std::size_t b = 0; b < size; ++b)
      if (!covered[b] && shadows(best_s, b)) {
        covered[b] = true;
        --remaining;
      }
    ++out.count;
  }
  return out;
}

}  // namespace semient
