#pragma once

#include <optional>
#include <vector>

#include "semient/rational_map.hpp"

namespace semient {

enum class MobiusKind { Identity, Elliptic, Parabolic, Loxodromic };

const char* to_string(MobiusKind kind);

struct MobiusClass {
  MobiusKind kind;
  // Empty for the identity, one point for parabolic maps, two otherwise.
  std::vector<ProjPoint> fixed_points;
  // Filled when every fixed point is Gaussian rational.
  std::optional<std::vector<ExactPoint>> exact_fixed_points;
  // Ratio of the eigenvalues, taken with modulus >= 1; absent for the
  // identity.
  std::optional<Complex> multiplier;
};

// Classification by trace^2 / det of the coefficient matrix. Throws
// NotMobius unless deg f = 1.
MobiusClass classify_mobius(const RationalMap& f);

}  // namespace semient
