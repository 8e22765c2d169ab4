#include "semient/proj_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <unordered_map>

#include "semient/error.hpp"

namespace semient {

ProjPoint ProjPoint::normalize(Complex raw_h0, Complex raw_h1) {
  const double a0 = std::abs(raw_h0);
  const double a1 = std::abs(raw_h1);
  if (!(a0 > 0.0) && !(a1 > 0.0)) {
    throw Error(ErrorCode::ZeroVector, "both homogeneous coordinates vanish");
  }
  if (!std::isfinite(a0) || !std::isfinite(a1)) {
    if (std::isinf(a0) && !std::isinf(a1)) return infinity();
    if (std::isinf(a1) && !std::isinf(a0)) return zero();
    throw Error(ErrorCode::ZeroVector, "non-finite homogeneous coordinates");
  }
  if (a0 < 1e-14 * a1) return zero();
  const double norm = std::hypot(a0, a1);
  // Divide by the phase of h0 so that h0 becomes real and positive.
  const Complex phase = raw_h0 / a0;
  return ProjPoint(Complex(a0 / norm, 0.0), raw_h1 / (phase * norm));
}

Complex ProjPoint::affine() const {
  if (is_infinity()) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  return h0_ / h1_;
}

std::array<double, 3> ProjPoint::sphere() const {
  const Complex w = h0_ * std::conj(h1_);
  return {2.0 * w.real(), 2.0 * w.imag(), std::norm(h0_) - std::norm(h1_)};
}

double chordal_dist(const ProjPoint& p, const ProjPoint& q) {
  const double num = std::abs(p.h0() * q.h1() - p.h1() * q.h0());
  const double den = std::sqrt((std::norm(p.h0()) + std::norm(p.h1())) *
                               (std::norm(q.h0()) + std::norm(q.h1())));
  return std::min(1.0, num / den);
}

bool canonical_less(const ProjPoint& p, const ProjPoint& q) {
  return p.sphere() < q.sphere();
}

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller on the raw 64-bit stream, so sequences do not depend on the
// standard library's distribution implementations.
std::array<double, 4> gaussian4(std::mt19937_64& rng) {
  std::array<double, 4> g{};
  for (int i = 0; i < 4; i += 2) {
    double u1 = unit_double(rng);
    while (u1 <= 0.0) u1 = unit_double(rng);
    const double u2 = unit_double(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    g[i] = r * std::cos(2.0 * std::numbers::pi * u2);
    g[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
  }
  return g;
}

struct CellKey {
  long x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.x) * 73856093u;
    h ^= static_cast<std::size_t>(k.y) * 19349663u;
    h ^= static_cast<std::size_t>(k.z) * 83492791u;
    return h;
  }
};

}  // namespace

std::vector<ProjPoint> sample_points(std::size_t count, std::uint64_t seed) {
  constexpr double kMinSeparation = 1e-10;
  constexpr double kCell = 1e-3;
  std::mt19937_64 rng(seed);
  std::vector<ProjPoint> out;
  out.reserve(count);
  std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> grid;
  auto key_of = [](const std::array<double, 3>& s) {
    return CellKey{static_cast<long>(std::floor(s[0] / kCell)),
                   static_cast<long>(std::floor(s[1] / kCell)),
                   static_cast<long>(std::floor(s[2] / kCell))};
  };
  while (out.size() < count) {
    const auto g = gaussian4(rng);
    const Complex h0(g[0], g[1]);
    const Complex h1(g[2], g[3]);
    if (std::abs(h0) + std::abs(h1) == 0.0) continue;
    const ProjPoint p = ProjPoint::normalize(h0, h1);
    const auto s = p.sphere();
    const CellKey key = key_of(s);
    bool duplicate = false;
    for (long dx = -1; dx <= 1 && !duplicate; ++dx)
      for (long dy = -1; dy <= 1 && !duplicate; ++dy)
        for (long dz = -1; dz <= 1 && !duplicate; ++dz) {
          auto it = grid.find({key.x + dx, key.y + dy, key.z + dz});
          if (it == grid.end()) continue;
          for (std::size_t idx : it->second)
            if (chordal_dist(out[idx], p) < kMinSeparation) duplicate = true;
        }
    if (duplicate) continue;
    grid[key].push_back(out.size());
    out.push_back(p);
  }
  return out;
}

ProjPoint point_at_distance(const ProjPoint& center, double rho, double angle) {
  rho = std::clamp(rho, 0.0, 1.0);
  // In the frame where center is [0 : 1], a point at chordal distance rho is
  // [w : 1] with |w| / sqrt(1 + |w|^2) = rho, i.e. the unit vector
  // (rho e^{i angle}, sqrt(1 - rho^2)).
  const Complex a = std::polar(rho, angle);
  const double b = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  // Unitary U with U (0, 1)^T = (c0, c1)^T and U (1, 0)^T = (conj c1, -conj c0)^T.
  const Complex c0 = center.h0();
  const Complex c1 = center.h1();
  const Complex h0 = std::conj(c1) * a + c0 * b;
  const Complex h1 = -std::conj(c0) * a + c1 * b;
  return ProjPoint::normalize(h0, h1);
}

ExactPoint ExactPoint::normalize(const ExactScalar& h0, const ExactScalar& h1) {
  if (h0.is_zero() && h1.is_zero()) {
    throw Error(ErrorCode::ZeroVector, "both exact homogeneous coordinates vanish");
  }
  if (h1.is_zero()) return ExactPoint(ExactScalar(1), ExactScalar(0));
  return ExactPoint(h0 / h1, ExactScalar(1));
}

std::string ExactPoint::to_string() const {
  if (is_infinity()) return "inf";
  return h0_.to_string();
}

ExactPoint rationalize(const ProjPoint& p, long max_den) {
  if (std::abs(p.h1()) < 1e-12 * std::abs(p.h0())) return ExactPoint::infinity();
  const Complex z = p.affine();
  return ExactPoint::from_affine(
      ExactScalar(rationalize(z.real(), max_den), rationalize(z.imag(), max_den)));
}

}  // namespace semient
