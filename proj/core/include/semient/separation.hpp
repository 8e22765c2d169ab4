#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semient/orbit.hpp"

namespace semient {

enum class SeparationMode { DinhSibony, Friedland, PerWord };

const char* to_string(SeparationMode mode);

struct SeparationCount {
  double epsilon = 0.0;
  int nu = 0;
  SeparationMode mode = SeparationMode::DinhSibony;
  std::vector<int> word;  // PerWord only
  std::int64_t count = 0;
  std::int64_t pool_size = 0;
  bool exact = false;
};

struct CountOptions {
  // Pools up to this size get an exact maximum independent set (at most 64).
  std::size_t exact_limit = 20;
};

// Largest subfamily of pairwise separated orbits.
//  DinhSibony: separated if d(x_k, y_k) > eps for some k or some symbol
//    differs.
//  Friedland: symbols are ignored.
//  PerWord: the pool is restricted to orbits with the given word, then
//    points-only separation.
// Exact for small pools; otherwise a greedy maximal family taken in pool
// order, so callers control the (seeded) order. Throws EmptyPool.
SeparationCount count_separated(const OrbitPool& pool, double eps, SeparationMode mode,
                                const std::vector<int>& word = {}, const CountOptions& opt = {});
SeparationCount count_separated(const std::vector<NuOrbit>& pool, double eps, SeparationMode mode,
                                const std::vector<int>& word = {}, const CountOptions& opt = {});

// Orbits are not separated: every point gap <= eps (and, if with_symbols,
// identical words).
bool non_separated(const OrbitPool& pool, std::size_t a, std::size_t b, double eps, bool with_symbols);

// Size of a maximum independent set of the graph given by adjacency
// bitmasks (n <= 64). The members are written to chosen if non-null.
int max_independent_set(const std::vector<std::uint64_t>& adjacency, std::uint64_t* chosen = nullptr);

struct SumUpResult {
  std::vector<std::vector<int>> words;
  std::vector<std::int64_t> per_word;
  std::int64_t per_word_sum = 0;
  std::int64_t joint = 0;
  bool exact = false;
  bool identity_holds = false;
};

// Per-word maxima n(eps, word) and the joint Dinh-Sibony maximum.
SumUpResult sum_up_partition(const OrbitPool& pool, double eps, const CountOptions& opt = {});

// Largest family pairwise separated by bowen_delta(., ., n) > eps.
SeparationCount count_bowen_separated(const OrbitPool& paths, double eps, int n, const CountOptions& opt = {});

// The greatest integer strictly below log2(1 / eps) (diameter 1).
int separation_depth_constant(double eps);

struct SpanningResult {
  std::int64_t count = 0;
  bool exact = false;
};

// Smallest subset S of the pool such that every element p has some s in S
// with max_{0<=j<n} Delta(S^j p, S^j s) <= eps.
SpanningResult spanning_number(const OrbitPool& paths, double eps, int n, const CountOptions& opt = {});

}  // namespace semient
