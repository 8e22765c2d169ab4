#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semient/semigroup.hpp"

namespace semient {

// log sum_j d_j^n in nats. Throws EmptyInput; degrees must be positive.
double exact_htop(const std::vector<std::int64_t>& degrees, int n);

// d_p = sum_j d_j^p for p = 0..n.
std::vector<mpz_class> dynamical_degrees(const std::vector<std::int64_t>& degrees, int n);

// (lower, upper) with lower = log sum d_j^n and
// upper = max(log N, log sum d_j^n, max_{1<=p<=n-1} log d_p).
std::pair<double, double> general_bounds_eval(const std::vector<std::int64_t>& degrees, int n);

struct ExactEntropyRecord {
  int n = 1;
  std::vector<std::int64_t> degrees;  // one entry per graph, repeated by multiplicity
  double h_top_exact = 0.0;
  std::vector<mpz_class> dynamical_degrees;
  double lower = 0.0;
  double upper = 0.0;
  std::int64_t d_top = 0;
};

ExactEntropyRecord exact_record(const std::vector<std::int64_t>& degrees, int n = 1);
ExactEntropyRecord exact_record(const Correspondence& c);

// Natural log of a positive big integer without overflow.
double log_mpz(const mpz_class& v);

}  // namespace semient
