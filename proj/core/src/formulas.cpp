#include "semient/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "semient/error.hpp"

namespace semient {

namespace {

void check_degrees(const std::vector<std::int64_t>& degrees, int n) {
  if (degrees.empty()) throw Error(ErrorCode::EmptyInput, "no degrees given");
  if (n < 1) throw Error(ErrorCode::SchemaViolation, "dimension must be positive", "/space");
  for (auto d : degrees)
    if (d < 1) throw Error(ErrorCode::SchemaViolation, "degrees must be positive");
}

mpz_class power_sum(const std::vector<std::int64_t>& degrees, int p) {
  mpz_class sum = 0;
  for (auto d : degrees) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(p));
    sum += t;
  }
  return sum;
}

}  // namespace

double log_mpz(const mpz_class& v) {
  // Exactly representable values go straight to log so small cases are
  // correctly rounded.
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) return std::log(v.get_d());
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double exact_htop(const std::vector<std::int64_t>& degrees, int n) {
  check_degrees(degrees, n);
  return log_mpz(power_sum(degrees, n));
}

std::vector<mpz_class> dynamical_degrees(const std::vector<std::int64_t>& degrees, int n) {
  check_degrees(degrees, n);
  std::vector<mpz_class> out;
  for (int p = 0; p <= n; ++p) out.push_back(power_sum(degrees, p));
  return out;
}

std::pair<double, double> general_bounds_eval(const std::vector<std::int64_t>& degrees, int n) {
  const auto dp = dynamical_degrees(degrees, n);
  const double lower = log_mpz(dp[n]);
  double upper = std::max(std::log(static_cast<double>(degrees.size())), lower);
  for (int p = 1; p <= n - 1; ++p) upper = std::max(upper, log_mpz(dp[p]));
  return {lower, upper};
}

ExactEntropyRecord exact_record(const std::vector<std::int64_t>& degrees, int n) {
  ExactEntropyRecord r;
  r.n = n;
  r.degrees = degrees;
  r.h_top_exact = exact_htop(degrees, n);
  r.dynamical_degrees = dynamical_degrees(degrees, n);
  std::tie(r.lower, r.upper) = general_bounds_eval(degrees, n);
  const mpz_class top = r.dynamical_degrees[n];
  r.d_top = top.fits_slong_p() ? top.get_si() : -1;
  return r;
}

ExactEntropyRecord exact_record(const Correspondence& c) {
  std::vector<std::int64_t> degrees;
  for (const auto& comp : c.components())
    for (std::int64_t k = 0; k < comp.multiplicity; ++k) degrees.push_back(comp.map.degree());
  return exact_record(degrees, 1);
}

}  // namespace semient
