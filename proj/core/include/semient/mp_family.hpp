#pragma once

#include <cstdint>
#include <vector>

#include "semient/orbit.hpp"

namespace semient {

struct MpFamilyOptions {
  std::size_t jacobian_samples = 4000;
  std::size_t radius_samples = 200;
  double max_radius = 0.2;
  double min_radius = 1e-4;
  double max_orbits = 2e6;
};

struct MpFamily {
  OrbitPool orbits{0};
  double beta = 0.0;
  double L = 0.0;
  double delta = 0.0;
  double eps_beta = 0.0;
  std::int64_t count = 0;
  // Orbits removed because the post-hoc check found a non-separated pair.
  std::int64_t dropped = 0;
  bool verified = false;
};

// Per-word preimage families with low-Jacobian pruning, unioned over all
// words. L is 1.05 times the sampled maximum Jacobian (at least 1.05),
// delta = L^(-beta / (1 - beta)), and eps_beta is a sampled injectivity
// radius over points with Jacobian >= delta. Every word's family is checked
// pairwise for (eps_beta, word)-separation and violators are dropped.
MpFamily mp_family(const GeneratorSet& gens, double beta, int nu, std::uint64_t seed,
                   const MpFamilyOptions& opt = {});

// Largest r in [min_radius, max_radius] (halving from max_radius) such that
// no point sampled on rings around x within r has another preimage of its
// image within r of x.
double injectivity_radius(const RationalMap& f, const ProjPoint& x, const MpFamilyOptions& opt = {});

// Words are pairwise (eps, word)-separated: for each pair some point gap
// exceeds eps.
bool verify_word_separated(const OrbitPool& family, double eps);

}  // namespace semient
