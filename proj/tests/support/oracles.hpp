#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's numerical kernels.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_dec_float.hpp>

namespace oracle {

using Complex = std::complex<double>;

// Mean chordal distance from a fixed point under the normalized area
// measure, by composite Simpson on the polar angle. Chordal distance to the
// pole at polar angle t is sin(t / 2); the density is sin(t) / 2.
inline double mean_chordal_quadrature(int panels = 2000) {
  const double pi = 3.14159265358979323846;
  auto g = [](double t) { return std::sin(t / 2) * std::sin(t) / 2; };
  const double h = pi / panels;
  double s = g(0) + g(pi);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4 : 2) * g(i * h);
  return s * h / 3;
}

// Canonical representative computed in 50 decimal digits.
inline std::array<Complex, 2> hp_normalize(Complex a, Complex b) {
  using F = boost::multiprecision::cpp_dec_float_50;
  F ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
  F norm = sqrt(ar * ar + ai * ai + br * br + bi * bi);
  // Phase of the first nonzero coordinate.
  F pr, pi;
  if (ar != 0 || ai != 0) {
    F m = sqrt(ar * ar + ai * ai);
    pr = ar / m;
    pi = ai / m;
  } else {
    F m = sqrt(br * br + bi * bi);
    pr = br / m;
    pi = bi / m;
  }
  // Multiply by conj(phase) / norm.
  auto rot = [&](const F& x, const F& y) {
    F re = (x * pr + y * pi) / norm;
    F im = (y * pr - x * pi) / norm;
    return Complex(static_cast<double>(re), static_cast<double>(im));
  };
  return {rot(ar, ai), rot(br, bi)};
}

// Roots of sum c[k] z^(n-k) (highest power first) from companion-matrix
// eigenvalues.
inline std::vector<Complex> companion_roots(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) m(0, j) = -c[j + 1] / c[0];
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

// Maximum independent set size by exhaustive subset search (n <= 20).
inline int brute_force_mis(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (s >> i & 1)
        for (int j = i + 1; j < n && ok; ++j)
          if ((s >> j & 1) && adj[i][j]) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

// Stereographic image of an affine coordinate on the unit sphere.
inline std::array<double, 3> sphere_of(Complex z) {
  const double n = 1 + std::norm(z);
  return {2 * z.real() / n, 2 * z.imag() / n, (std::norm(z) - 1) / n};
}

// Area distortion of an affine map g at z: ratio of the sphere areas of a
// small symmetric quadrilateral and its image.
inline double fd_area_ratio(const std::function<Complex(Complex)>& g, Complex z, double h = 1e-4) {
  auto area = [&](const std::function<Complex(Complex)>& f) {
    const auto a = sphere_of(f(z + h)), b = sphere_of(f(z + Complex(0, h)));
    const auto c = sphere_of(f(z - h)), d = sphere_of(f(z - Complex(0, h)));
    const double u[3] = {a[0] - c[0], a[1] - c[1], a[2] - c[2]};
    const double v[3] = {b[0] - d[0], b[1] - d[1], b[2] - d[2]};
    const double x = u[1] * v[2] - u[2] * v[1], y = u[2] * v[0] - u[0] * v[2], w = u[0] * v[1] - u[1] * v[0];
    return std::sqrt(x * x + y * y + w * w) / 2;
  };
  return area(g) / area([](Complex w) { return w; });
}

}  // namespace oracle
