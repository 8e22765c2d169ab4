#pragma once

#include <optional>
#include <vector>

#include "semient/exact_scalar.hpp"

namespace semient {

// A homogeneous binary form sum_k c[k] z0^(d-k) z1^k of degree d = size - 1.
// Coefficients are stored in descending powers of z0, so the same array read
// as a univariate polynomial in z = z0 / z1 is the dehomogenization at z1 = 1.
template <class T>
using BinaryForm = std::vector<T>;

using ExactForm = BinaryForm<ExactScalar>;
using FloatForm = BinaryForm<Complex>;

template <class T>
BinaryForm<T> multiply(const BinaryForm<T>& a, const BinaryForm<T>& b) {
  BinaryForm<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == T(0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class T>
BinaryForm<T> add(const BinaryForm<T>& a, const BinaryForm<T>& b) {
  BinaryForm<T> out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

template <class T>
BinaryForm<T> scale(BinaryForm<T> a, const T& s) {
  for (auto& c : a) c *= s;
  return a;
}

template <class T>
BinaryForm<T> power(const BinaryForm<T>& a, int e) {
  BinaryForm<T> out{T(1)};
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

// Substitutes (z0, z1) -> (p, q) into f. p and q must have equal degree.
template <class T>
BinaryForm<T> substitute(const BinaryForm<T>& f, const BinaryForm<T>& p, const BinaryForm<T>& q) {
  const int d = static_cast<int>(f.size()) - 1;
  const int e = static_cast<int>(p.size()) - 1;
  std::vector<BinaryForm<T>> p_pow{BinaryForm<T>{T(1)}};
  std::vector<BinaryForm<T>> q_pow{BinaryForm<T>{T(1)}};
  for (int i = 1; i <= d; ++i) {
    p_pow.push_back(multiply(p_pow.back(), p));
    q_pow.push_back(multiply(q_pow.back(), q));
  }
  BinaryForm<T> out(static_cast<std::size_t>(d * e + 1), T(0));
  for (int k = 0; k <= d; ++k) {
    if (f[k] == T(0)) continue;
    out = add(out, scale(multiply(p_pow[d - k], q_pow[k]), f[k]));
  }
  return out;
}

// Partial derivatives with respect to z0 and z1.
template <class T>
BinaryForm<T> d_dz0(const BinaryForm<T>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 0) return {T(0)};
  BinaryForm<T> out(d, T(0));
  for (int k = 0; k < d; ++k) out[k] = f[k] * T(d - k);
  return out;
}

template <class T>
BinaryForm<T> d_dz1(const BinaryForm<T>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 0) return {T(0)};
  BinaryForm<T> out(d, T(0));
  for (int k = 1; k <= d; ++k) out[k - 1] = f[k] * T(k);
  return out;
}

FloatForm to_float(const ExactForm& f);

// Horner evaluation scaled by the larger coordinate, so no intermediate
// exceeds the coefficient magnitudes.
Complex evaluate(const FloatForm& f, Complex h0, Complex h1);
// Same evaluation in extended precision.
std::complex<long double> evaluate_extended(const FloatForm& f, Complex h0, Complex h1);
// Sum of |c_k| |h0|^(d-k) |h1|^k: the magnitude scale of the terms.
double term_scale(const FloatForm& f, Complex h0, Complex h1);

ExactScalar evaluate(const ExactForm& f, const ExactScalar& h0, const ExactScalar& h1);

bool is_zero(const ExactForm& f);
// Number of leading zero coefficients, i.e. the power of z1 dividing f.
std::size_t z1_power(const ExactForm& f);

// Exact quotient a / b if b divides a, nullopt otherwise.
std::optional<ExactForm> divide_exact(const ExactForm& a, const ExactForm& b);

// Monic (first nonzero coefficient 1) greatest common divisor of two
// nonzero forms.
ExactForm gcd(const ExactForm& a, const ExactForm& b);

}  // namespace semient
