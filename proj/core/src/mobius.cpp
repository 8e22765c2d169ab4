#include "semient/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "semient/error.hpp"

namespace semient {

const char* to_string(MobiusKind kind) {
  switch (kind) {
    case MobiusKind::Identity: return "identity";
    case MobiusKind::Elliptic: return "elliptic";
    case MobiusKind::Parabolic: return "parabolic";
    case MobiusKind::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

MobiusClass classify_mobius(const RationalMap& f) {
  if (f.degree() != 1) throw Error(ErrorCode::NotMobius, "degree is not 1");
  // z -> (a z + b) / (c z + d)
  const ExactScalar& a = f.num()[0];
  const ExactScalar& b = f.num()[1];
  const ExactScalar& c = f.den()[0];
  const ExactScalar& d = f.den()[1];

  MobiusClass out{};
  if (b.is_zero() && c.is_zero() && a == d) {
    out.kind = MobiusKind::Identity;
    out.exact_fixed_points = std::vector<ExactPoint>{};
    return out;
  }

  const ExactScalar trace = a + d;
  const ExactScalar det = a * d - b * c;
  const ExactScalar t = trace * trace / det;
  bool parabolic = false;
  bool elliptic = false;
  if (f.exact()) {
    parabolic = t == ExactScalar(4);
    elliptic = !parabolic && t.is_real() && sgn(t.re()) >= 0 && t.re() < 4;
  } else {
    const Complex tc = t.to_complex();
    parabolic = std::abs(tc - 4.0) <= 1e-12;
    elliptic = !parabolic && std::abs(tc.imag()) <= 1e-12 && tc.real() >= 0.0 && tc.real() < 4.0;
  }
  out.kind = parabolic ? MobiusKind::Parabolic : (elliptic ? MobiusKind::Elliptic : MobiusKind::Loxodromic);

  // Fixed points: z0 Q - z1 P = c z0^2 + (d - a) z0 z1 - b z1^2.
  const ExactForm fixed{c, d - a, -b};
  const ExactRootSplit split = solve_form_exact(fixed);
  if (split.numeric.empty()) {
    std::vector<ExactPoint> pts;
    for (const auto& r : split.exact) {
      pts.push_back(r.point);
      out.fixed_points.push_back(r.point.to_proj());
    }
    out.exact_fixed_points = std::move(pts);
  } else {
    for (const auto& r : split.exact) out.fixed_points.push_back(r.point.to_proj());
    for (const auto& r : split.numeric) out.fixed_points.push_back(r.point);
  }
  std::sort(out.fixed_points.begin(), out.fixed_points.end(), canonical_less);

  // Eigenvalues of [[a, b], [c, d]].
  const Complex tr = trace.to_complex();
  const Complex disc = std::sqrt(tr * tr - 4.0 * det.to_complex());
  const Complex l1 = (tr + disc) / 2.0;
  const Complex l2 = (tr - disc) / 2.0;
  Complex k = parabolic ? Complex(1.0) : l1 / l2;
  if (std::abs(k) < 1.0) k = 1.0 / k;
  out.multiplier = k;
  return out;
}

}  // namespace semient
