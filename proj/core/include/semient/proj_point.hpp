#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "semient/exact_scalar.hpp"

namespace semient {

inline constexpr double kDefaultTol = 1e-12;

// A point [h0 : h1] of the Riemann sphere. The affine coordinate is
// z = h0 / h1, so [1 : 0] is infinity and [z : 1] is the finite point z.
//
// Instances are always canonical: ||(h0, h1)||_2 = 1 and the first nonzero
// coordinate (h0 preferred) is real and positive. If |h0| < 1e-14 |h1| the
// point is snapped to [0 : 1].
class ProjPoint {
 public:
  static ProjPoint normalize(Complex raw_h0, Complex raw_h1);
  static ProjPoint from_affine(Complex z) { return normalize(z, 1.0); }
  static ProjPoint infinity() { return ProjPoint(1.0, 0.0); }
  static ProjPoint zero() { return ProjPoint(0.0, 1.0); }

  Complex h0() const { return h0_; }
  Complex h1() const { return h1_; }
  bool is_infinity() const { return h1_ == Complex(0.0, 0.0); }
  // Affine coordinate; infinite components when the point is [1 : 0].
  Complex affine() const;
  // Image on the unit sphere in R^3 under the Hopf map. Euclidean distance
  // there is exactly twice the chordal distance.
  std::array<double, 3> sphere() const;

 private:
  ProjPoint(Complex h0, Complex h1) : h0_(h0), h1_(h1) {}
  Complex h0_;
  Complex h1_;
};

// |p0 q1 - p1 q0| / (|p| |q|), the chordal metric with diameter 1.
double chordal_dist(const ProjPoint& p, const ProjPoint& q);

// Lexicographic order on sphere coordinates; used for reproducible output.
bool canonical_less(const ProjPoint& p, const ProjPoint& q);

// Points uniformly distributed for the rotation-invariant measure, drawn
// from a seeded mt19937_64. No two returned points are within 1e-10.
std::vector<ProjPoint> sample_points(std::size_t count, std::uint64_t seed);

// The point at chordal distance rho (0 <= rho <= 1) from center in the
// direction given by angle, measured in the unitary frame that carries
// [0 : 1] to center.
ProjPoint point_at_distance(const ProjPoint& center, double rho, double angle);

// A Gaussian-rational point of the sphere, normalized so that h1 = 1, or
// (1, 0) for infinity. Equality is exact.
class ExactPoint {
 public:
  static ExactPoint normalize(const ExactScalar& h0, const ExactScalar& h1);
  static ExactPoint from_affine(const ExactScalar& z) { return normalize(z, ExactScalar(1)); }
  static ExactPoint infinity() { return normalize(ExactScalar(1), ExactScalar(0)); }

  const ExactScalar& h0() const { return h0_; }
  const ExactScalar& h1() const { return h1_; }
  bool is_infinity() const { return h1_.is_zero(); }
  ProjPoint to_proj() const { return ProjPoint::normalize(h0_.to_complex(), h1_.to_complex()); }
  std::string to_string() const;

  friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
    return a.h0_ == b.h0_ && a.h1_ == b.h1_;
  }

 private:
  ExactPoint(ExactScalar h0, ExactScalar h1) : h0_(std::move(h0)), h1_(std::move(h1)) {}
  ExactScalar h0_;
  ExactScalar h1_;
};

// Rationalizes both coordinates of p (denominators <= max_den). The result
// is a candidate only; callers must verify it exactly.
ExactPoint rationalize(const ProjPoint& p, long max_den = 1000000);

}  // namespace semient
