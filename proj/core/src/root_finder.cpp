#include "semient/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "semient/error.hpp"

namespace semient {

namespace {

using CL = std::complex<long double>;

// Initial guesses from the upper convex hull of (j, log|b_j|), where b_j is
// the coefficient of z^j. Each hull edge contributes a circle of radius
// matching the root moduli it predicts.
std::vector<CL> newton_polygon_guesses(const std::vector<CL>& b) {
  const int n = static_cast<int>(b.size()) - 1;
  std::vector<int> hull;
  std::vector<long double> logs(b.size());
  for (int j = 0; j <= n; ++j)
    logs[j] = std::abs(b[j]) > 0 ? std::log(std::abs(b[j])) : -std::numeric_limits<long double>::infinity();
  for (int j = 0; j <= n; ++j) {
    if (!std::isfinite(logs[j])) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int m = hull.back();
      // Drop m if it lies on or below the segment a-j.
      const long double cross = (logs[m] - logs[a]) * (j - a) - (logs[j] - logs[a]) * (m - a);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(j);
  }
  std::vector<CL> guesses;
  guesses.reserve(n);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e];
    const int k = hull[e + 1];
    const int count = k - i;
    const long double radius = std::exp((logs[i] - logs[k]) / count);
    for (int t = 0; t < count; ++t) {
      const long double angle = two_pi * t / count + two_pi * e / n + 0.4L;
      guesses.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  return guesses;
}

// Evaluates p and p' (ascending coefficients) at z with Horner, plus the
// magnitude scale sum |b_j| |z|^j.
void eval_with_derivative(const std::vector<CL>& b, CL z, CL& p, CL& dp, long double& scale) {
  const int n = static_cast<int>(b.size()) - 1;
  p = b[n];
  dp = 0;
  scale = std::abs(b[n]);
  const long double az = std::abs(z);
  for (int j = n - 1; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + b[j];
    scale = scale * az + std::abs(b[j]);
  }
}

// Aberth-Ehrlich on a polynomial with nonzero constant and leading
// coefficients. Returns approximations to all n roots.
std::vector<CL> aberth(const std::vector<CL>& b, const RootFinderOptions& opt) {
  const int n = static_cast<int>(b.size()) - 1;
  if (n == 1) return {-b[0] / b[1]};
  std::vector<CL> z = newton_polygon_guesses(b);
  std::vector<bool> done(n, false);
  // Iterate to extended-precision accuracy; opt.residual_tol is the
  // acceptance threshold checked afterwards.
  const long double tol = std::min<long double>(opt.residual_tol, 64 * std::numeric_limits<long double>::epsilon());
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      CL p, dp;
      long double scale;
      eval_with_derivative(b, z[i], p, dp, scale);
      if (std::abs(p) <= tol * scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const CL ratio = p / dp;
      CL sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += CL(1) / (z[i] - z[j]);
      const CL step = ratio / (CL(1) - ratio * sum);
      if (std::isfinite(std::abs(step))) z[i] -= step;
    }
    if (all_done) break;
  }
  for (int i = 0; i < n; ++i) {
    // Newton polish, accepted only if it lowers the residual.
    CL p, dp;
    long double scale;
    eval_with_derivative(b, z[i], p, dp, scale);
    if (std::abs(dp) == 0) continue;
    const CL candidate = z[i] - p / dp;
    CL p2, dp2;
    long double scale2;
    eval_with_derivative(b, candidate, p2, dp2, scale2);
    if (std::abs(p2) < std::abs(p)) z[i] = candidate;
  }
  for (int i = 0; i < n; ++i) {
    CL p, dp;
    long double scale;
    eval_with_derivative(b, z[i], p, dp, scale);
    if (!(std::abs(p) <= opt.residual_tol * scale))
      throw Error(ErrorCode::RootFindingFailure, "root iteration did not reach the residual tolerance");
  }
  return z;
}

std::vector<Root> merge_clusters(std::vector<Root> roots, double tol) {
  std::vector<Root> merged;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Complex h0 = roots[i].point.h0() * double(roots[i].multiplicity);
    Complex h1 = roots[i].point.h1() * double(roots[i].multiplicity);
    int mult = roots[i].multiplicity;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j] || chordal_dist(roots[i].point, roots[j].point) > tol) continue;
      used[j] = true;
      // Rotate the representative onto the first one before averaging; near
      // [0 : 1] canonical phases of neighbours can differ arbitrarily.
      const ProjPoint& a = roots[i].point;
      const ProjPoint& b = roots[j].point;
      const Complex inner = std::conj(b.h0()) * a.h0() + std::conj(b.h1()) * a.h1();
      const Complex phase = std::abs(inner) > 0 ? inner / std::abs(inner) : Complex(1.0);
      h0 += b.h0() * phase * double(roots[j].multiplicity);
      h1 += b.h1() * phase * double(roots[j].multiplicity);
      mult += roots[j].multiplicity;
    }
    merged.push_back({ProjPoint::normalize(h0, h1), mult});
  }
  std::sort(merged.begin(), merged.end(),
            [](const Root& a, const Root& b) { return canonical_less(a.point, b.point); });
  return merged;
}

}  // namespace

std::vector<Root> solve_form(const FloatForm& f, const RootFinderOptions& opt) {
  const int d = static_cast<int>(f.size()) - 1;
  int lead_zeros = 0;
  while (lead_zeros <= d && f[lead_zeros] == Complex(0)) ++lead_zeros;
  if (lead_zeros > d) throw Error(ErrorCode::RootFindingFailure, "zero form has no isolated roots");
  int trail_zeros = 0;
  while (f[d - trail_zeros] == Complex(0)) ++trail_zeros;

  std::vector<Root> roots;
  if (lead_zeros > 0) roots.push_back({ProjPoint::infinity(), lead_zeros});
  if (trail_zeros > 0) roots.push_back({ProjPoint::zero(), trail_zeros});

  // Core polynomial: descending coefficients f[lead_zeros .. d - trail_zeros].
  const int core_deg = d - lead_zeros - trail_zeros;
  if (core_deg > 0) {
    const Complex lead = f[lead_zeros];
    const Complex trail = f[d - trail_zeros];
    const bool reversed = std::abs(lead) < std::abs(trail);
    // Ascending coefficients of the polynomial in the chosen chart. In the
    // z = h0/h1 chart, z^j has coefficient f[d - trail_zeros - j]; in the
    // reciprocal chart w = h1/h0 the order flips.
    std::vector<CL> b(core_deg + 1);
    for (int j = 0; j <= core_deg; ++j) {
      const int idx = reversed ? lead_zeros + j : d - trail_zeros - j;
      b[j] = CL(f[idx]);
    }
    for (const CL& r : aberth(b, opt)) {
      const Complex rc(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      if (!std::isfinite(rc.real()) || !std::isfinite(rc.imag()))
        throw Error(ErrorCode::RootFindingFailure, "root iteration diverged");
      roots.push_back({reversed ? ProjPoint::normalize(1.0, rc) : ProjPoint::normalize(rc, 1.0), 1});
    }
  }
  return merge_clusters(std::move(roots), opt.cluster_tol);
}

ExactRootSplit solve_form_exact(const ExactForm& f, const RootFinderOptions& opt) {
  if (is_zero(f)) throw Error(ErrorCode::RootFindingFailure, "zero form has no isolated roots");
  ExactRootSplit out;
  ExactForm rest = f;
  const std::size_t at_inf = z1_power(rest);
  if (at_inf > 0) {
    out.exact.push_back({ExactPoint::infinity(), static_cast<int>(at_inf)});
    rest.erase(rest.begin(), rest.begin() + static_cast<long>(at_inf));
  }
  std::size_t at_zero = 0;
  while (rest.size() > 1 && rest.back().is_zero()) {
    rest.pop_back();
    ++at_zero;
  }
  if (at_zero > 0) out.exact.push_back({ExactPoint::from_affine(ExactScalar(0)), static_cast<int>(at_zero)});

  while (rest.size() > 1) {
    bool found = false;
    for (const Root& r : solve_form(to_float(rest), opt)) {
      if (r.point.is_infinity()) continue;
      const ExactPoint guess = rationalize(r.point);
      if (guess.is_infinity()) continue;
      // Linear factor z0 - g z1 in descending order: (1, -g).
      const ExactForm linear{ExactScalar(1), -guess.h0()};
      int mult = 0;
      while (rest.size() > 1) {
        auto q = divide_exact(rest, linear);
        if (!q) break;
        rest = std::move(*q);
        ++mult;
      }
      if (mult > 0) {
        out.exact.push_back({guess, mult});
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  if (rest.size() > 1) out.numeric = solve_form(to_float(rest), opt);
  return out;
}

}  // namespace semient
