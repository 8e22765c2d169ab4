#include "semient/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "semient/error.hpp"

namespace semient {

OrbitPool::OrbitPool(int nu) : nu_(nu) {
  if (nu < 0) throw Error(ErrorCode::SchemaViolation, "negative orbit length");
}

std::int64_t OrbitPool::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

void OrbitPool::add(const NuOrbit& o, std::int64_t weight) {
  if (o.nu() != nu_ || static_cast<int>(o.points.size()) != nu_ + 1)
    throw Error(ErrorCode::MixedNu, "orbit length differs from pool length");
  add(o.points.data(), o.symbols.data(), weight);
}

void OrbitPool::add(const ProjPoint* pts, const int* syms, std::int64_t weight) {
  points_.insert(points_.end(), pts, pts + nu_ + 1);
  symbols_.insert(symbols_.end(), syms, syms + nu_);
  weights_.push_back(weight);
}

void OrbitPool::append(const OrbitPool& other) {
  if (other.nu_ != nu_) throw Error(ErrorCode::MixedNu, "pools of different length");
  points_.insert(points_.end(), other.points_.begin(), other.points_.end());
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  weights_.insert(weights_.end(), other.weights_.begin(), other.weights_.end());
}

NuOrbit OrbitPool::orbit(std::size_t i) const {
  NuOrbit o;
  o.points.assign(points_of(i), points_of(i) + nu_ + 1);
  o.symbols.assign(symbols_of(i), symbols_of(i) + nu_);
  return o;
}

std::vector<NuOrbit> OrbitPool::orbits() const {
  std::vector<NuOrbit> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(orbit(i));
  return out;
}

OrbitPool OrbitPool::truncate(int nu) const {
  if (nu > nu_ || nu < 0) throw Error(ErrorCode::DepthMismatch, "cannot truncate beyond pool length");
  OrbitPool out(nu);
  for (std::size_t i = 0; i < size(); ++i) out.add(points_of(i), symbols_of(i), weights_[i]);
  return out;
}

OrbitPool OrbitPool::select(const std::vector<std::size_t>& indices) const {
  OrbitPool out(nu_);
  for (std::size_t i : indices) out.add(points_of(i), symbols_of(i), weights_[i]);
  return out;
}

OrbitPool make_pool(const std::vector<NuOrbit>& orbits) {
  if (orbits.empty()) throw Error(ErrorCode::EmptyPool, "no orbits");
  OrbitPool pool(orbits.front().nu());
  for (const auto& o : orbits) pool.add(o);
  return pool;
}

bool is_consistent(const Correspondence& c, const NuOrbit& o, double tol) {
  const auto sym = c.symbol_components();
  if (o.points.size() != o.symbols.size() + 1) return false;
  for (int k = 0; k < o.nu(); ++k) {
    const int s = o.symbols[k];
    if (s < 0 || s >= static_cast<int>(sym.size())) return false;
    const ProjPoint image = evaluate(c.components()[sym[s]].map, o.points[k]);
    if (chordal_dist(image, o.points[k + 1]) > tol) return false;
  }
  return true;
}

OrbitPool forward_orbits(const Correspondence& c, const std::vector<ProjPoint>& starts, int nu,
                         double max_orbits) {
  const auto sym = c.symbol_components();
  const int m = static_cast<int>(sym.size());
  if (static_cast<double>(starts.size()) * std::pow(static_cast<double>(m), nu) > max_orbits)
    throw Error(ErrorCode::BudgetExceeded, "|starts| * M^nu exceeds the orbit budget");
  OrbitPool pool(nu);
  std::vector<ProjPoint> pts(nu + 1, ProjPoint::zero());
  std::vector<int> syms(nu, 0);
  const auto& comps = c.components();
  for (const ProjPoint& x0 : starts) {
    pts[0] = x0;
    // Depth-first in lexicographic word order; points of a prefix are reused.
    auto visit = [&](auto&& self, int k) -> void {
      if (k == nu) {
        pool.add(pts.data(), syms.data());
        return;
      }
      int prev_comp = -1;
      for (int s = 0; s < m; ++s) {
        syms[k] = s;
        if (sym[s] != prev_comp) {
          pts[k + 1] = evaluate(comps[sym[s]].map, pts[k]);
          prev_comp = sym[s];
        }
        self(self, k + 1);
        // Deeper levels overwrite pts[k + 2..]; pts[k + 1] only depends on s.
      }
    };
    visit(visit, 0);
  }
  return pool;
}

OrbitPool forward_orbits_sampled(const Correspondence& c, const std::vector<ProjPoint>& starts, int nu,
                                 std::size_t words_per_start, std::uint64_t seed) {
  const auto sym = c.symbol_components();
  const std::uint64_t m = sym.size();
  std::mt19937_64 rng(seed);
  OrbitPool pool(nu);
  std::vector<ProjPoint> pts(nu + 1, ProjPoint::zero());
  std::vector<int> syms(nu, 0);
  for (const ProjPoint& x0 : starts) {
    pts[0] = x0;
    for (std::size_t w = 0; w < words_per_start; ++w) {
      for (int k = 0; k < nu; ++k) {
        syms[k] = static_cast<int>(rng() % m);
        pts[k + 1] = evaluate(c.components()[sym[syms[k]]].map, pts[k]);
      }
      pool.add(pts.data(), syms.data());
    }
  }
  return pool;
}

namespace {

struct TreeBuilder {
  const Correspondence& c;
  const PreimageTreeOptions& opt;
  std::vector<int> sym;
  int nu;

  // Preimages of y under component comp after floor pruning.
  std::vector<Root> step(int comp, const ProjPoint& y) const {
    const RationalMap& f = c.components()[comp].map;
    std::vector<Root> roots = preimages(f, y);
    for (const Root& r : roots)
      if (r.multiplicity > 1 && !opt.allow_critical)
        throw Error(ErrorCode::NonGenericTerminal, "backward branch meets a critical value");
    if (opt.jac_floor > 0.0) {
      for (const Root& r : roots)
        if (fs_jacobian(f, r.point) < opt.jac_floor) return {r};
    }
    return roots;
  }

  // Expands backwards from level k (x_k known) for the symbols fixed in
  // word (word[k-1] is alpha_k). Orbits are emitted into pool.
  void expand(const std::vector<int>& word, std::vector<ProjPoint>& pts, int k, std::int64_t weight,
              OrbitPool& pool) const {
    if (k == 0) {
      pool.add(pts.data(), word.data(), weight);
      return;
    }
    for (const Root& r : step(sym[word[k - 1]], pts[k])) {
      pts[k - 1] = r.point;
      expand(word, pts, k - 1, weight * r.multiplicity, pool);
    }
  }
};

template <class Body>
OrbitPool with_retries(const ProjPoint& terminal, const PreimageTreeOptions& opt, Body body) {
  ProjPoint t = terminal;
  for (int attempt = 0;; ++attempt) {
    try {
      return body(t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonGenericTerminal || attempt >= opt.retries) throw;
      t = point_at_distance(terminal, 1e-6, 2.399963 * (attempt + 1));
    }
  }
}

}  // namespace

OrbitPool preimage_tree_word(const Correspondence& c, const ProjPoint& terminal, const std::vector<int>& word,
                             const PreimageTreeOptions& opt) {
  const int nu = static_cast<int>(word.size());
  if (nu < 1) throw Error(ErrorCode::EmptyPath, "empty word");
  return with_retries(terminal, opt, [&](const ProjPoint& t) {
    TreeBuilder b{c, opt, c.symbol_components(), nu};
    OrbitPool pool(nu);
    std::vector<ProjPoint> pts(nu + 1, t);
    b.expand(word, pts, nu, 1, pool);
    return pool;
  });
}

OrbitPool preimage_tree(const Correspondence& c, const ProjPoint& terminal, int nu,
                        const PreimageTreeOptions& opt) {
  if (nu < 1) throw Error(ErrorCode::EmptyPath, "tree depth must be positive");
  if (opt.jac_floor == 0.0 && std::pow(static_cast<double>(d_top(c)), nu) > opt.max_orbits)
    throw Error(ErrorCode::BudgetExceeded, "d_top^nu exceeds the orbit budget");
  return with_retries(terminal, opt, [&](const ProjPoint& t) {
    TreeBuilder b{c, opt, c.symbol_components(), nu};
    const int m = static_cast<int>(b.sym.size());
    std::vector<ProjPoint> pts(nu + 1, t);
    std::vector<int> word(nu, 0);
    // Expansion runs suffix-first so preimages of a shared suffix are
    // computed once; orbits are regrouped by word afterwards.
    OrbitPool raw(nu);
    auto visit = [&](auto&& self, int k, std::int64_t weight) -> void {
      if (k == 0) {
        raw.add(pts.data(), word.data(), weight);
        return;
      }
      for (int s = 0; s < m; ++s) {
        word[k - 1] = s;
        for (const Root& r : b.step(b.sym[s], pts[k])) {
          pts[k - 1] = r.point;
          self(self, k - 1, weight * r.multiplicity);
        }
      }
    };
    visit(visit, nu, 1);
    // Stable sort by word (alpha_1 first).
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return std::lexicographical_compare(raw.symbols_of(x), raw.symbols_of(x) + nu, raw.symbols_of(y),
                                          raw.symbols_of(y) + nu);
    });
    return raw.select(order);
  });
}

TruncatedPath shift(const TruncatedPath& p) {
  if (p.depth() < 1) throw Error(ErrorCode::EmptyPath, "cannot shift a path of depth 0");
  TruncatedPath q;
  q.orbit.points.assign(p.orbit.points.begin() + 1, p.orbit.points.end());
  q.orbit.symbols.assign(p.orbit.symbols.begin() + 1, p.orbit.symbols.end());
  return q;
}

double delta_metric(const TruncatedPath& p, const TruncatedPath& q) {
  if (p.depth() != q.depth()) throw Error(ErrorCode::DepthMismatch, "paths of different depth");
  double out = 0.0;
  double w = 1.0;
  for (int k = 0; k <= p.depth(); ++k, w *= 0.5) {
    out = std::max(out, chordal_dist(p.orbit.points[k], q.orbit.points[k]) * w);
    if (k < p.depth() && p.orbit.symbols[k] != q.orbit.symbols[k]) out = std::max(out, w);
  }
  return out;
}

namespace {

template <class PointAt, class SymAt>
double bowen_closed_form(int depth, int n, PointAt point_gap, SymAt sym_differs) {
  double out = 0.0;
  for (int k = 0; k <= depth; ++k) {
    const double w = k <= n ? 1.0 : std::ldexp(1.0, -(k - n));
    out = std::max(out, point_gap(k) * w);
    if (k < depth && sym_differs(k)) out = std::max(out, w);
  }
  return out;
}

}  // namespace

double bowen_delta(const TruncatedPath& p, const TruncatedPath& q, int n) {
  if (p.depth() != q.depth()) throw Error(ErrorCode::DepthMismatch, "paths of different depth");
  if (n < 0 || n > p.depth()) throw Error(ErrorCode::DepthMismatch, "horizon exceeds path depth");
  return bowen_closed_form(
      p.depth(), n, [&](int k) { return chordal_dist(p.orbit.points[k], q.orbit.points[k]); },
      [&](int k) { return p.orbit.symbols[k] != q.orbit.symbols[k]; });
}

double bowen_delta(const OrbitPool& pool, std::size_t a, std::size_t b, int n) {
  if (n < 0 || n > pool.nu()) throw Error(ErrorCode::DepthMismatch, "horizon exceeds path depth");
  return bowen_closed_form(
      pool.nu(), n, [&](int k) { return chordal_dist(pool.point(a, k), pool.point(b, k)); },
      [&](int k) { return pool.symbol(a, k) != pool.symbol(b, k); });
}

}  // namespace semient
