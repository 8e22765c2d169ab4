#include "semient/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "semient/error.hpp"
#include "semient/mean_cycle.hpp"

namespace semient {

namespace {

struct ExactLess {
  bool operator()(const ExactPoint& a, const ExactPoint& b) const {
    if (int c = compare(a.h0(), b.h0()); c != 0) return c < 0;
    return compare(a.h1(), b.h1()) < 0;
  }
};

// Deduplicates floating points within tol through a grid of cell 2 tol
// on the sphere.
class FloatPointIndex {
 public:
  explicit FloatPointIndex(double tol) : tol_(tol), cell_(std::max(2.0 * tol, 1e-12)) {}

  // Returns (id, inserted).
  std::pair<int, bool> insert(const ProjPoint& p) {
    if (int id = find(p); id >= 0) return {id, false};
    const auto key = key_of(p);
    const int id = static_cast<int>(points_.size());
    points_.push_back(p);
    grid_[key].push_back(id);
    return {id, true};
  }

  int find(const ProjPoint& p) const {
    const auto key = key_of(p);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = grid_.find({key[0] + dx, key[1] + dy, key[2] + dz});
          if (it == grid_.end()) continue;
          for (int id : it->second)
            if (chordal_dist(points_[id], p) <= tol_) return id;
        }
    return -1;
  }

  const ProjPoint& operator[](int id) const { return points_[id]; }
  std::size_t size() const { return points_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const std::array<long, 3>& k) const noexcept {
      return static_cast<std::size_t>(k[0]) * 73856093u ^ static_cast<std::size_t>(k[1]) * 19349663u ^
             static_cast<std::size_t>(k[2]) * 83492791u;
    }
  };
  std::array<long, 3> key_of(const ProjPoint& p) const {
    const auto s = p.sphere();
    return {static_cast<long>(std::floor(s[0] / cell_)), static_cast<long>(std::floor(s[1] / cell_)),
            static_cast<long>(std::floor(s[2] / cell_))};
  }
  double tol_;
  double cell_;
  std::vector<ProjPoint> points_;
  std::unordered_map<std::array<long, 3>, std::vector<int>, Hash> grid_;
};

std::size_t bit_size(const ExactPoint& p) {
  auto bits = [](const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  return std::max({bits(p.h0().re()), bits(p.h0().im()), bits(p.h1().re()), bits(p.h1().im())});
}

struct ExactTooLarge {};

// Node store used by the breadth-first searches: exact or floating.
class PointStore {
 public:
  PointStore(bool exact, double tol, std::size_t max_bits) : exact_(exact), index_(tol), max_bits_(max_bits) {}

  bool exact() const { return exact_; }

  std::pair<int, bool> insert_exact(const ExactPoint& p) {
    if (bit_size(p) > max_bits_) throw ExactTooLarge{};
    auto [it, inserted] = exact_ids_.emplace(p, static_cast<int>(exact_points_.size()));
    if (inserted) {
      exact_points_.push_back(p);
      proj_.push_back(p.to_proj());
    }
    return {it->second, inserted};
  }

  std::pair<int, bool> insert_float(const ProjPoint& p) {
    auto r = index_.insert(p);
    if (r.second) proj_.push_back(p);
    return r;
  }

  // Image of node id under f, inserted.
  std::pair<int, bool> image(const RationalMap& f, int id) {
    if (exact_) return insert_exact(evaluate(f, exact_points_[id]));
    return insert_float(evaluate(f, proj_[id]));
  }

  const ProjPoint& proj(int id) const { return proj_[id]; }
  std::size_t size() const { return proj_.size(); }

 private:
  bool exact_;
  FloatPointIndex index_;
  std::size_t max_bits_;
  std::map<ExactPoint, int, ExactLess> exact_ids_;
  std::vector<ExactPoint> exact_points_;
  std::vector<ProjPoint> proj_;
};

bool all_exact(const Correspondence& c) {
  return std::all_of(c.components().begin(), c.components().end(),
                     [](const Component& comp) { return comp.map.exact(); });
}

template <class Seed>
RecurrenceCertificate recurrence_search(const Correspondence& c, const ProjPoint& x, Seed seed, bool exact,
                                        int depth, const RecurrenceOptions& opt) {
  RecurrenceCertificate cert;
  cert.point = x;
  cert.searched_depth = depth;
  cert.exact = exact;
  PointStore store(exact, opt.tol, opt.max_exact_bits);
  const int start = seed(store);
  // Per-layer deduplication: the frontier is the set F^nu(x) itself.
  std::vector<int> frontier{start};
  for (int nu = 1; nu <= depth; ++nu) {
    std::vector<int> next;
    std::vector<char> in_next;
    for (int id : frontier)
      for (const auto& comp : c.components()) {
        const int img = store.image(comp.map, id).first;
        if (static_cast<std::size_t>(img) >= in_next.size()) in_next.resize(img + 1, 0);
        if (!in_next[img]) {
          in_next[img] = 1;
          next.push_back(img);
        }
      }
    if (next.size() > opt.max_frontier)
      throw Error(ErrorCode::BudgetExceeded, "recurrence frontier exceeds its budget");
    if (std::find(next.begin(), next.end(), start) != next.end()) cert.return_depths.push_back(nu);
    frontier = std::move(next);
  }
  cert.recurrent = !cert.return_depths.empty();
  return cert;
}

}  // namespace

std::vector<CoincidencePoint> coincidence_set(const GeneratorSet& gens) {
  std::vector<CoincidencePoint> out;
  auto merge = [&](const ProjPoint& p, const std::optional<ExactPoint>& e, int i, int j) {
    for (auto& cp : out) {
      const bool same = (e && cp.exact_point) ? *e == *cp.exact_point : chordal_dist(cp.point, p) <= 1e-9;
      if (same) {
        cp.witnesses.insert({i, j});
        if (e && !cp.exact_point) {
          cp.exact_point = e;
          cp.point = p;
        }
        return;
      }
    }
    CoincidencePoint cp{p, e, {{i, j}}};
    out.push_back(std::move(cp));
  };
  const int n = static_cast<int>(gens.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const RationalMap& f = gens[i];
      const RationalMap& g = gens[j];
      const ExactForm cross =
          add(multiply(f.num(), g.den()), scale(multiply(g.num(), f.den()), ExactScalar(-1)));
      if (f.exact() && g.exact()) {
        const ExactRootSplit split = solve_form_exact(cross);
        for (const auto& r : split.exact) merge(r.point.to_proj(), r.point, i, j);
        for (const auto& r : split.numeric) merge(r.point, std::nullopt, i, j);
      } else {
        for (const auto& r : solve_form(to_float(cross))) merge(r.point, std::nullopt, i, j);
      }
    }
  std::sort(out.begin(), out.end(),
            [](const CoincidencePoint& a, const CoincidencePoint& b) { return canonical_less(a.point, b.point); });
  return out;
}

RecurrenceCertificate is_recurrent(const Correspondence& c, const ProjPoint& x, int depth,
                                   const RecurrenceOptions& opt) {
  return recurrence_search(
      c, x, [&](PointStore& s) { return s.insert_float(x).first; }, false, depth, opt);
}

RecurrenceCertificate is_recurrent(const Correspondence& c, const ExactPoint& x, int depth,
                                   const RecurrenceOptions& opt) {
  if (all_exact(c)) {
    try {
      return recurrence_search(
          c, x.to_proj(), [&](PointStore& s) { return s.insert_exact(x).first; }, true, depth, opt);
    } catch (const ExactTooLarge&) {
    }
  }
  return is_recurrent(c, x.to_proj(), depth, opt);
}

namespace {

FiberEntropyValue finish_fiber(std::vector<int> pre, std::vector<int> cyc) {
  FiberEntropyValue v;
  double sum = 0.0;
  for (int m : cyc) {
    sum += std::log(static_cast<double>(m));
    if (m >= 2) v.infinite_fiber = true;
  }
  v.value = sum / static_cast<double>(cyc.size());
  v.preperiod_multiplicities = std::move(pre);
  v.cycle_multiplicities = std::move(cyc);
  return v;
}

template <class P, class Count>
FiberEntropyValue fiber_generic(const std::vector<P>& preperiod, const std::vector<P>& cycle, Count count) {
  if (cycle.empty()) throw Error(ErrorCode::InconsistentItinerary, "itinerary has no cycle");
  std::vector<P> seq(preperiod);
  seq.insert(seq.end(), cycle.begin(), cycle.end());
  seq.push_back(cycle.front());
  std::vector<int> pre, cyc;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const int m = count(seq[k], seq[k + 1]);
    if (m == 0)
      throw Error(ErrorCode::InconsistentItinerary, "no generator maps step " + std::to_string(k) + " forward");
    (k < preperiod.size() ? pre : cyc).push_back(m);
  }
  return finish_fiber(std::move(pre), std::move(cyc));
}

}  // namespace

FiberEntropyValue fiber_entropy(const GeneratorSet& gens, const Itinerary& it, double tol) {
  return fiber_generic(it.preperiod, it.cycle, [&](const ProjPoint& a, const ProjPoint& b) {
    int m = 0;
    for (const auto& f : gens.maps())
      if (chordal_dist(evaluate(f, a), b) <= tol) ++m;
    return m;
  });
}

FiberEntropyValue fiber_entropy(const GeneratorSet& gens, const ExactItinerary& it) {
  if (!gens.exact()) throw Error(ErrorCode::InconsistentItinerary, "exact itinerary needs exact generators");
  return fiber_generic(it.preperiod, it.cycle, [&](const ExactPoint& a, const ExactPoint& b) {
    int m = 0;
    for (const auto& f : gens.maps())
      if (evaluate(f, a) == b) ++m;
    return m;
  });
}

FriedlandBounds friedland_bounds(const GeneratorSet& gens, int depth, const FriedlandOptions& opt) {
  if (depth < 1) throw Error(ErrorCode::SchemaViolation, "depth must be positive");
  FriedlandBounds out;
  double total = 0;
  for (int d : gens.degrees()) total += d;
  out.upper = std::log(total);
  out.coincidence = coincidence_set(gens);
  const Correspondence c = build_correspondence(gens);
  const bool exact_maps = gens.exact();

  std::vector<std::size_t> recurrent;
  for (std::size_t i = 0; i < out.coincidence.size(); ++i) {
    const auto& cp = out.coincidence[i];
    out.recurrence.push_back(cp.exact_point ? is_recurrent(c, *cp.exact_point, depth, opt.recurrence)
                                            : is_recurrent(c, cp.point, depth, opt.recurrence));
    if (out.recurrence.back().recurrent) recurrent.push_back(i);
  }

  // Exact exploration when every recurrent seed is exact; falls back to
  // floating point if coordinates grow too large.
  bool exact = exact_maps && std::all_of(recurrent.begin(), recurrent.end(),
                                         [&](std::size_t i) { return out.coincidence[i].exact(); });
  for (int attempt = 0; attempt < 2; ++attempt) {
    try {
      PointStore store(exact, opt.recurrence.tol, opt.recurrence.max_exact_bits);
      std::vector<int> seeds;
      for (std::size_t i : recurrent) {
        const auto& cp = out.coincidence[i];
        seeds.push_back(exact ? store.insert_exact(*cp.exact_point).first : store.insert_float(cp.point).first);
      }
      std::map<std::pair<int, int>, int> mult;
      std::vector<int> layer = seeds;
      std::vector<char> expanded;
      bool cap = false;
      for (int step = 0; step < depth && !layer.empty(); ++step) {
        std::vector<int> next;
        for (int u : layer) {
          if (static_cast<std::size_t>(u) < expanded.size() && expanded[u]) continue;
          if (static_cast<std::size_t>(u) >= expanded.size()) expanded.resize(u + 1, 0);
          expanded[u] = 1;
          for (const auto& f : gens.maps()) {
            if (store.size() >= opt.max_nodes) {
              cap = true;
              break;
            }
            auto [v, inserted] = store.image(f, u);
            ++mult[{u, v}];
            if (inserted) next.push_back(v);
          }
        }
        layer = std::move(next);
      }
      if (!layer.empty()) cap = true;
      out.depth_cap_hit = cap;
      out.exact = exact;
      out.nodes.clear();
      for (std::size_t i = 0; i < store.size(); ++i) out.nodes.push_back(store.proj(static_cast<int>(i)));
      out.edges.clear();
      std::vector<WeightedEdge> wedges;
      for (const auto& [key, m] : mult) {
        out.edges.push_back({key.first, key.second, m});
        wedges.push_back({key.first, key.second, std::log(static_cast<double>(m))});
      }
      int ncomp = 0;
      const int nn = static_cast<int>(store.size());
      const auto comp = strongly_connected_components(nn, wedges, &ncomp);
      std::vector<std::vector<int>> members(ncomp);
      for (int v = 0; v < nn; ++v) members[comp[v]].push_back(v);
      double s_hat = 0.0;
      std::vector<char> done(ncomp, 0);
      for (int sd : seeds) {
        if (done[comp[sd]]) continue;
        done[comp[sd]] = 1;
        const double mean = max_mean_cycle(nn, wedges, members[comp[sd]]);
        if (std::isfinite(mean)) s_hat = std::max(s_hat, mean);
      }
      out.s_hat = s_hat;
      break;
    } catch (const ExactTooLarge&) {
      exact = false;
    }
  }
  out.lower = std::max(0.0, out.upper - out.s_hat);
  return out;
}

}  // namespace semient
