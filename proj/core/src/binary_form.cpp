#include "semient/binary_form.hpp"

#include <cmath>
#include <stdexcept>

namespace semient {

FloatForm to_float(const ExactForm& f) {
  FloatForm out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(c.to_complex());
  return out;
}

namespace {

template <class C>
C horner_scaled(const FloatForm& f, C h0, C h1) {
  const std::size_t d = f.size() - 1;
  // For |h0| >= |h1|: h0^d * sum c_k t^k with t = h1 / h0; otherwise the
  // mirrored expansion in s = h0 / h1.
  if (std::abs(h0) >= std::abs(h1)) {
    const C t = h1 / h0;
    C acc = C(f[d]);
    for (std::size_t k = d; k-- > 0;) acc = acc * t + C(f[k]);
    C lead(1);
    for (std::size_t i = 0; i < d; ++i) lead *= h0;
    return acc * lead;
  }
  const C s = h0 / h1;
  C acc = C(f[0]);
  for (std::size_t k = 1; k <= d; ++k) acc = acc * s + C(f[k]);
  C lead(1);
  for (std::size_t i = 0; i < d; ++i) lead *= h1;
  return acc * lead;
}

}  // namespace

Complex evaluate(const FloatForm& f, Complex h0, Complex h1) {
  return horner_scaled<Complex>(f, h0, h1);
}

std::complex<long double> evaluate_extended(const FloatForm& f, Complex h0, Complex h1) {
  using CL = std::complex<long double>;
  return horner_scaled<CL>(f, CL(h0), CL(h1));
}

double term_scale(const FloatForm& f, Complex h0, Complex h1) {
  const std::size_t d = f.size() - 1;
  const double a0 = std::abs(h0);
  const double a1 = std::abs(h1);
  double sum = 0.0;
  for (std::size_t k = 0; k <= d; ++k) {
    sum += std::abs(f[k]) * std::pow(a0, static_cast<double>(d - k)) *
           std::pow(a1, static_cast<double>(k));
  }
  return sum;
}

ExactScalar evaluate(const ExactForm& f, const ExactScalar& h0, const ExactScalar& h1) {
  const std::size_t d = f.size() - 1;
  ExactScalar acc(0);
  // sum c_k h0^(d-k) h1^k via powers; degrees are small.
  std::vector<ExactScalar> p0{ExactScalar(1)}, p1{ExactScalar(1)};
  for (std::size_t i = 0; i < d; ++i) {
    p0.push_back(p0.back() * h0);
    p1.push_back(p1.back() * h1);
  }
  for (std::size_t k = 0; k <= d; ++k) {
    if (f[k].is_zero()) continue;
    acc += f[k] * p0[d - k] * p1[k];
  }
  return acc;
}

bool is_zero(const ExactForm& f) {
  for (const auto& c : f)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t z1_power(const ExactForm& f) {
  std::size_t n = 0;
  while (n < f.size() && f[n].is_zero()) ++n;
  return n;
}

namespace {

// Univariate helpers on descending coefficient arrays with nonzero lead.
void trim_leading(ExactForm& p) {
  std::size_t n = z1_power(p);
  if (n == p.size()) {
    p = {ExactScalar(0)};
    return;
  }
  p.erase(p.begin(), p.begin() + static_cast<long>(n));
}

// Remainder of a modulo b (b trimmed, nonzero).
ExactForm poly_mod(ExactForm a, const ExactForm& b) {
  trim_leading(a);
  if (b.size() == 1) return {ExactScalar(0)};
  const ExactScalar inv_lead = ExactScalar(1) / b[0];
  while (a.size() >= b.size() && !is_zero(a)) {
    const ExactScalar factor = a[0] * inv_lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
    trim_leading(a);
  }
  return a;
}

ExactForm make_monic(ExactForm p) {
  trim_leading(p);
  const ExactScalar inv = ExactScalar(1) / p[0];
  for (auto& c : p) c *= inv;
  return p;
}

}  // namespace

std::optional<ExactForm> divide_exact(const ExactForm& a, const ExactForm& b) {
  if (is_zero(b)) throw std::domain_error("division by the zero form");
  if (b.size() > a.size()) return std::nullopt;
  const std::size_t sb = z1_power(b);
  if (z1_power(a) < sb) return std::nullopt;
  ExactForm rem(a.begin() + static_cast<long>(sb), a.end());
  ExactForm div(b.begin() + static_cast<long>(sb), b.end());
  const std::size_t qlen = rem.size() - div.size() + 1;
  ExactForm quotient(qlen, ExactScalar(0));
  const ExactScalar inv_lead = ExactScalar(1) / div[0];
  for (std::size_t i = 0; i < qlen; ++i) {
    if (rem[i].is_zero()) continue;
    const ExactScalar factor = rem[i] * inv_lead;
    quotient[i] = factor;
    for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= factor * div[j];
  }
  for (const auto& c : rem)
    if (!c.is_zero()) return std::nullopt;
  return quotient;
}

ExactForm gcd(const ExactForm& a, const ExactForm& b) {
  if (is_zero(a) || is_zero(b)) throw std::domain_error("gcd with the zero form");
  const std::size_t common_z1 = std::min(z1_power(a), z1_power(b));
  ExactForm x(a.begin() + static_cast<long>(common_z1), a.end());
  ExactForm y(b.begin() + static_cast<long>(common_z1), b.end());
  trim_leading(x);
  trim_leading(y);
  while (!is_zero(y)) {
    ExactForm r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  ExactForm g = make_monic(x);
  ExactForm out(common_z1, ExactScalar(0));
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

}  // namespace semient
