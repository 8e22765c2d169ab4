#include "semient/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "semient/error.hpp"

namespace semient {

EntropyEstimate entropy_fit(const std::vector<SeparationCount>& counts, int fit_window) {
  if (counts.empty()) throw Error(ErrorCode::InsufficientData, "no counts to fit");
  std::map<double, std::map<int, double>> by_eps;
  for (const auto& c : counts) {
    if (c.count < 1) throw Error(ErrorCode::InsufficientData, "count below 1");
    by_eps[c.epsilon][c.nu] = std::log(static_cast<double>(c.count));
  }
  EntropyEstimate est;
  est.method = counts.front().mode;
  est.counts = counts;
  est.all_exact = std::all_of(counts.begin(), counts.end(), [](const SeparationCount& c) { return c.exact; });
  bool first = true;
  int lo = 0, hi = 0;
  for (const auto& [eps, series] : by_eps) {
    std::vector<std::pair<int, double>> pts(series.begin(), series.end());
    if (fit_window > 0 && static_cast<int>(pts.size()) > fit_window)
      pts.erase(pts.begin(), pts.end() - fit_window);
    if (pts.size() < 3)
      throw Error(ErrorCode::InsufficientData, "fewer than 3 distinct nu at epsilon " + std::to_string(eps));
    const double n = static_cast<double>(pts.size());
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    const double slope = sxy / sxx;
    double sse = 0;
    for (const auto& [x, y] : pts) {
      const double r = y - (my + slope * (x - mx));
      sse += r * r;
    }
    EpsilonFit fit;
    fit.epsilon = eps;
    fit.slope = slope;
    fit.stderr_ = std::sqrt(sse / (n - 2.0) / sxx);
    for (const auto& p : pts) fit.nus.push_back(p.first);
    est.eps_grid.push_back(eps);
    if (first || slope > est.value) {
      est.value = slope;
      est.slope_stderr = fit.stderr_;
      est.best_epsilon = eps;
    }
    lo = first ? pts.front().first : std::min(lo, pts.front().first);
    hi = first ? pts.back().first : std::max(hi, pts.back().first);
    first = false;
    est.per_epsilon.push_back(std::move(fit));
  }
  est.value = std::max(0.0, est.value);
  est.nu_range = {lo, hi};
  return est;
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::size_t terminals_for(const Correspondence& c, int nu, const EstimatorConfig& cfg) {
  if (cfg.terminals == 0) return 0;
  const double tree = std::pow(static_cast<double>(d_top(c)), nu);
  const double fit = std::floor(cfg.max_tree / tree);
  return static_cast<std::size_t>(std::min<double>(fit, static_cast<double>(cfg.terminals)));
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<int> feasible_ladder(const Correspondence& c, const EstimatorConfig& cfg) {
  std::vector<int> out;
  for (int nu : cfg.nu_ladder)
    if (cfg.terminals == 0 || terminals_for(c, nu, cfg) >= 1) out.push_back(nu);
  return out;
}

std::size_t ladder_terminals(const Correspondence& c, const std::vector<int>& ladder, const EstimatorConfig& cfg) {
  std::size_t n = cfg.terminals;
  for (int nu : ladder) n = std::min(n, terminals_for(c, nu, cfg));
  return n;
}

OrbitPool build_estimator_pool(const Correspondence& c, int nu, std::size_t n_term, const EstimatorConfig& cfg) {
  const double m = static_cast<double>(c.total_multiplicity());
  const auto starts = sample_points(cfg.start_pool, mix(cfg.seed, 1));
  OrbitPool pool(nu);
  if (!starts.empty()) {
    const double full = static_cast<double>(starts.size()) * std::pow(m, nu);
    if (full <= cfg.max_forward) {
      pool.append(forward_orbits(c, starts, nu, cfg.max_forward));
    } else {
      const std::size_t per = std::max<std::size_t>(
          1, static_cast<std::size_t>(cfg.max_forward / static_cast<double>(starts.size())));
      pool.append(forward_orbits_sampled(c, starts, nu, per, mix(cfg.seed, 100 + nu)));
    }
  }
  if (static_cast<double>(n_term) * std::pow(static_cast<double>(d_top(c)), nu) > cfg.max_tree)
    throw Error(ErrorCode::BudgetExceeded, "preimage trees exceed the tree budget", "/estimator/max_tree");
  const auto terminals = sample_points(std::max<std::size_t>(n_term, 1), mix(cfg.seed, 2));
  PreimageTreeOptions topt;
  topt.max_orbits = cfg.max_tree;
  for (std::size_t t = 0; t < n_term; ++t) pool.append(preimage_tree(c, terminals[t], nu, topt));
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "estimator pool is empty");

  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(mix(cfg.seed, 1000 + nu));
  // Fisher-Yates with the raw generator so the order is library independent.
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  return pool.select(order);
}

EntropyEstimate estimate_entropy(const Correspondence& c, SeparationMode mode, const EstimatorConfig& cfg) {
  if (mode == SeparationMode::PerWord)
    throw Error(ErrorCode::SchemaViolation, "per-word mode has no single entropy estimate");
  const std::vector<int> ladder = feasible_ladder(c, cfg);
  if (ladder.size() < 3)
    throw Error(ErrorCode::InsufficientData, "fewer than 3 nu values fit the budget", "/estimator/nu_ladder");
  CountOptions copt;
  copt.exact_limit = cfg.exact_limit;
  std::vector<std::vector<SeparationCount>> cells(ladder.size());
  std::vector<std::int64_t> sizes(ladder.size());
  const std::size_t n_term = ladder_terminals(c, ladder, cfg);
  for (std::size_t li = 0; li < ladder.size(); ++li) {
    const OrbitPool pool = build_estimator_pool(c, ladder[li], n_term, cfg);
    sizes[li] = static_cast<std::int64_t>(pool.size());
    cells[li].resize(cfg.eps_grid.size());
    parallel_for(cfg.eps_grid.size(), cfg.threads, [&](std::size_t ei) {
      cells[li][ei] = count_separated(pool, cfg.eps_grid[ei], mode, {}, copt);
    });
  }
  std::vector<SeparationCount> flat;
  for (const auto& row : cells) flat.insert(flat.end(), row.begin(), row.end());
  EntropyEstimate est = entropy_fit(flat, cfg.fit_window);
  est.method = mode;
  est.seed = cfg.seed;
  est.pool_sizes = sizes;
  return est;
}

}  // namespace semient
