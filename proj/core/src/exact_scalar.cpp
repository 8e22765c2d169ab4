#include "semient/exact_scalar.hpp"

#include <cctype>
#include <cmath>

#include "semient/error.hpp"

namespace semient {
namespace {

mpq_class parse_part(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::BadScalarLiteral, "cannot parse '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t first = 0;
  while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  s = s.substr(first);
  if (s.empty()) throw bad();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    auto is_int = [](const std::string& t, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    if (!is_int(num, true) || !is_int(den, false)) throw bad();
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw bad();
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent: [sign] digits [. digits] [e [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '-' || s[i] == '+') negative = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      ++frac_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw bad();
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) exp_negative = s[i++] == '-';
    if (i == s.size()) throw bad();
    std::string exp_digits;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) exp_digits += s[i];
    if (exp_digits.empty() || exp_digits.size() > 6) throw bad();
    exponent = std::stol(exp_digits) * (exp_negative ? -1 : 1);
  }
  if (i != s.size()) throw bad();

  mpz_class n(digits, 10);
  if (negative) n = -n;
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  mpq_class q = shift >= 0 ? mpq_class(n * scale) : mpq_class(n, scale);
  q.canonicalize();
  return q;
}

}  // namespace

ExactScalar::ExactScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactScalar ExactScalar::parse(std::string_view re, std::string_view im) {
  return {parse_part(re), parse_part(im)};
}

std::string ExactScalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i";
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("ExactScalar division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

int compare(const ExactScalar& a, const ExactScalar& b) {
  if (int c = cmp(a.re(), b.re()); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(a.im(), b.im()); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

mpq_class rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return mpq_class(0);
  if (std::fabs(x) > 1e12) return mpq_class(x);
  const bool negative = x < 0;
  double y = std::fabs(x);
  // Convergents h/k of the continued fraction of y.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(y));
  mpz_class k_prev = 0, k = 1;
  double frac = y - std::floor(y);
  for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
    y = 1.0 / frac;
    const double a_d = std::floor(y);
    if (a_d > 1e15) break;
    const mpz_class a = static_cast<long>(a_d);
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    const mpz_class h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = y - a_d;
  }
  mpq_class q(negative ? mpz_class(-h) : h, k);
  q.canonicalize();
  return q;
}

}  // namespace semient
