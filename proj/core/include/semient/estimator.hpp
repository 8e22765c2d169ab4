#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semient/separation.hpp"

namespace semient {

struct EpsilonFit {
  double epsilon = 0.0;
  double slope = 0.0;
  double stderr_ = 0.0;
  std::vector<int> nus;
};

struct EntropyEstimate {
  double value = 0.0;  // nats
  double slope_stderr = 0.0;
  double best_epsilon = 0.0;
  std::vector<double> eps_grid;
  std::pair<int, int> nu_range{0, 0};
  SeparationMode method = SeparationMode::DinhSibony;
  std::uint64_t seed = 0;
  std::vector<EpsilonFit> per_epsilon;
  std::vector<SeparationCount> counts;
  std::vector<std::int64_t> pool_sizes;  // one per nu in the ladder
  bool all_exact = false;
};

// Per epsilon, the least-squares slope of log(count) against nu; the
// estimate is the largest slope, clamped at 0. With fit_window > 0 only the
// last fit_window values of nu enter each regression. Throws
// InsufficientData if some epsilon has fewer than 3 distinct nu.
EntropyEstimate entropy_fit(const std::vector<SeparationCount>& counts, int fit_window = 0);

struct EstimatorConfig {
  std::vector<double> eps_grid{0.02, 0.05, 0.1, 0.2};
  std::vector<int> nu_ladder{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::size_t start_pool = 200;
  std::size_t terminals = 16;
  // Forward orbits per nu: all words while start_pool M^nu stays below
  // this, otherwise max_forward / start_pool sampled words per start.
  double max_forward = 50000;
  // Preimage-tree orbits per nu. nu values whose single full tree exceeds
  // it leave the ladder; the remaining ladder shares one terminal count,
  // the largest (up to `terminals`) that fits at its top nu.
  double max_tree = 300000;
  std::uint64_t seed = 0;
  std::size_t exact_limit = 20;
  int fit_window = 0;
  unsigned threads = 1;
};

// Forward orbits from start_pool sampled starts plus preimage trees from
// sampled terminals, shuffled with a generator derived from (seed, nu).
// The shuffled order is the greedy processing order.
OrbitPool build_estimator_pool(const Correspondence& c, int nu, std::size_t terminals,
                               const EstimatorConfig& cfg);

// The nu values of cfg.nu_ladder that fit the tree budget with at least one
// terminal.
std::vector<int> feasible_ladder(const Correspondence& c, const EstimatorConfig& cfg);
// Terminal count shared by a ladder.
std::size_t ladder_terminals(const Correspondence& c, const std::vector<int>& ladder, const EstimatorConfig& cfg);

EntropyEstimate estimate_entropy(const Correspondence& c, SeparationMode mode, const EstimatorConfig& cfg);

}  // namespace semient
