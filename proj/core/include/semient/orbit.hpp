#pragma once

#include <cstdint>
#include <vector>

#include "semient/semigroup.hpp"

namespace semient {

// (x_0, ..., x_nu; alpha_1, ..., alpha_nu). symbols[k] is alpha_{k+1}, a
// 0-based symbol of the correspondence (see symbol_components()).
struct NuOrbit {
  std::vector<ProjPoint> points;
  std::vector<int> symbols;
  int nu() const { return static_cast<int>(symbols.size()); }
};

// The first depth + 1 coordinates of an infinite path.
struct TruncatedPath {
  NuOrbit orbit;
  int depth() const { return orbit.nu(); }
};

// Orbits of one common length stored contiguously. Each orbit carries a
// weight: the product of root multiplicities along a preimage branch (1 for
// forward orbits and generic preimage trees).
class OrbitPool {
 public:
  explicit OrbitPool(int nu);

  int nu() const { return nu_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  const ProjPoint& point(std::size_t i, int k) const { return points_[i * (nu_ + 1) + k]; }
  int symbol(std::size_t i, int k) const { return symbols_[i * nu_ + k]; }
  const ProjPoint* points_of(std::size_t i) const { return &points_[i * (nu_ + 1)]; }
  const int* symbols_of(std::size_t i) const { return symbols_.data() + i * nu_; }
  std::int64_t weight(std::size_t i) const { return weights_[i]; }
  std::int64_t total_weight() const;

  void add(const NuOrbit& o, std::int64_t weight = 1);
  void add(const ProjPoint* pts, const int* syms, std::int64_t weight = 1);
  void append(const OrbitPool& other);

  NuOrbit orbit(std::size_t i) const;
  std::vector<NuOrbit> orbits() const;
  // Keeps the first nu + 1 points of every orbit.
  OrbitPool truncate(int nu) const;
  OrbitPool select(const std::vector<std::size_t>& indices) const;

 private:
  int nu_;
  std::vector<ProjPoint> points_;
  std::vector<int> symbols_;
  std::vector<std::int64_t> weights_;
};

OrbitPool make_pool(const std::vector<NuOrbit>& orbits);

// Checks chordal_dist(f_{alpha_k}(x_{k-1}), x_k) <= tol for every step.
bool is_consistent(const Correspondence& c, const NuOrbit& o, double tol = 1e-9);

// Every start followed through every word in {0..M-1}^nu, words in
// lexicographic order within each start. Throws BudgetExceeded when
// |starts| M^nu > max_orbits.
OrbitPool forward_orbits(const Correspondence& c, const std::vector<ProjPoint>& starts, int nu,
                         double max_orbits = 1e6);

// words_per_start random words for each start, drawn from a generator
// seeded with seed.
OrbitPool forward_orbits_sampled(const Correspondence& c, const std::vector<ProjPoint>& starts, int nu,
                                 std::size_t words_per_start, std::uint64_t seed);

struct PreimageTreeOptions {
  // Preimages with fs_jacobian below the floor are low-Jacobian; if a
  // backward step meets one, only one such preimage is kept.
  double jac_floor = 0.0;
  // Accept critical terminals and record root multiplicities as weights
  // instead of throwing NonGenericTerminal.
  bool allow_critical = false;
  double max_orbits = 1e6;
  // Automatic perturbations of size 1e-6 tried on NonGenericTerminal.
  int retries = 5;
};

// All nu-orbits ending at terminal, grouped by word in lexicographic order.
// With a zero floor and a generic terminal the total weight is d_top^nu.
OrbitPool preimage_tree(const Correspondence& c, const ProjPoint& terminal, int nu,
                        const PreimageTreeOptions& opt = {});

// The same restricted to one word.
OrbitPool preimage_tree_word(const Correspondence& c, const ProjPoint& terminal, const std::vector<int>& word,
                             const PreimageTreeOptions& opt = {});

// Drops x_0 and alpha_1. Throws EmptyPath at depth 0.
TruncatedPath shift(const TruncatedPath& p);

// max(sup_k d(x_k, y_k) / 2^k, sup_k delta(alpha_{k+1}, beta_{k+1}) / 2^k)
// with the 0-1 metric on symbols. Throws DepthMismatch.
double delta_metric(const TruncatedPath& p, const TruncatedPath& q);

// max_{0<=j<=n} Delta(S^j p, S^j q), evaluated in closed form: every
// coordinate term at index k is weighted by 2^-(k-n)+.
double bowen_delta(const TruncatedPath& p, const TruncatedPath& q, int n);
double bowen_delta(const OrbitPool& pool, std::size_t a, std::size_t b, int n);

}  // namespace semient
