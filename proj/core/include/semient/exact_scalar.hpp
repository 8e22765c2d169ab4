#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace semient {

using Complex = std::complex<double>;

// A Gaussian rational re + im*i with arbitrary-precision parts. mpq_class
// keeps both parts in lowest terms with positive denominators.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class re, mpq_class im);

  // Accepts integers ("-3"), fractions ("1/2") and finite decimals
  // ("0.25", "1e-3"); throws Error(BadScalarLiteral) on anything else.
  static ExactScalar parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  ExactScalar conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  ExactScalar operator-() const { return {-re_, -im_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Total order: real part first, then imaginary part.
int compare(const ExactScalar& a, const ExactScalar& b);

// Best rational approximation of x with denominator <= max_den
// (continued fractions).
mpq_class rationalize(double x, long max_den);

}  // namespace semient
