#include <gtest/gtest.h>

#include <random>

#include "semient/error.hpp"
#include "semient/proj_point.hpp"
#include "support/oracles.hpp"

using namespace semient;

namespace {

bool canonical(const ProjPoint& p) {
  const double n = std::norm(p.h0()) + std::norm(p.h1());
  const Complex lead = std::abs(p.h0()) > 0 ? p.h0() : p.h1();
  return std::abs(n - 1) < 1e-14 && std::abs(lead.imag()) < 1e-14 && lead.real() > 0;
}

ProjPoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return ProjPoint::normalize({g(rng), g(rng)}, {g(rng), g(rng)});
}

}  // namespace

TEST(Normalize, ScalesToUnitNorm) {
  const auto p = ProjPoint::normalize(2.0, 0.0);
  EXPECT_EQ(p.h0(), Complex(1, 0));
  EXPECT_EQ(p.h1(), Complex(0, 0));
}

TEST(Normalize, RemovesPhaseOfFirstNonzero) {
  const auto p = ProjPoint::normalize(0.0, Complex(0, 3));
  EXPECT_EQ(p.h0(), Complex(0, 0));
  EXPECT_NEAR(std::abs(p.h1() - Complex(1, 0)), 0, 1e-15);
}

TEST(Normalize, MatchesHighPrecisionOracle) {
  const Complex a(1, 1), b(1, -1);
  const auto p = ProjPoint::normalize(a, b);
  const auto ref = oracle::hp_normalize(a, b);
  EXPECT_NEAR(std::abs(p.h0() - ref[0]), 0, 1e-15);
  EXPECT_NEAR(std::abs(p.h1() - ref[1]), 0, 1e-15);
  EXPECT_NEAR(p.h0().real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(canonical(p));
  // The affine coordinate (a cross-ratio with 0, 1, infinity) is preserved.
  EXPECT_NEAR(std::abs(p.affine() - a / b), 0, 1e-15);
}

TEST(Normalize, RandomInputsAgreeWithOracle) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int i = 0; i < 1000; ++i) {
    const Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const auto p = ProjPoint::normalize(a, b);
    const auto ref = oracle::hp_normalize(a, b);
    ASSERT_TRUE(canonical(p));
    ASSERT_NEAR(std::abs(p.h0() - ref[0]) + std::abs(p.h1() - ref[1]), 0, 1e-14);
  }
}

TEST(Normalize, ScaledRepresentativesAgree) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int i = 0; i < 1000; ++i) {
    const Complex a(g(rng), g(rng)), b(g(rng), g(rng)), s(g(rng), g(rng));
    const auto p = ProjPoint::normalize(a, b), q = ProjPoint::normalize(s * a, s * b);
    ASSERT_NEAR(std::abs(p.h0() - q.h0()) + std::abs(p.h1() - q.h1()), 0, 1e-12);
  }
}

TEST(Normalize, TinyLeadingCoordinateSnapsToZero) {
  const auto p = ProjPoint::normalize(1e-16, 1.0);
  EXPECT_EQ(p.h0(), Complex(0, 0));
}

TEST(Normalize, ZeroVectorThrows) {
  try {
    ProjPoint::normalize(0.0, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(Chordal, Examples) {
  const auto p = ProjPoint::from_affine(Complex(0.3, -2));
  EXPECT_EQ(chordal_dist(p, p), 0.0);
  EXPECT_NEAR(chordal_dist(ProjPoint::infinity(), ProjPoint::zero()), 1.0, 1e-15);
  EXPECT_NEAR(chordal_dist(ProjPoint::normalize(1.0, 1.0), ProjPoint::normalize(1.0, -1.0)), 1.0, 1e-15);
}

TEST(Chordal, MetricAxiomsOnSampledTriples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_point(rng), b = random_point(rng), c = random_point(rng);
    const double ab = chordal_dist(a, b), ba = chordal_dist(b, a);
    ASSERT_EQ(ab, ba);
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, 1.0);
    ASSERT_LE(ab, chordal_dist(a, c) + chordal_dist(c, b) + 1e-12);
  }
}

TEST(Chordal, UnitaryInvariance) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int i = 0; i < 10000; ++i) {
    Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    const auto p = random_point(rng), q = random_point(rng);
    auto u = [&](const ProjPoint& x) {
      return ProjPoint::normalize(a * x.h0() + b * x.h1(), -std::conj(b) * x.h0() + std::conj(a) * x.h1());
    };
    ASSERT_NEAR(chordal_dist(u(p), u(q)), chordal_dist(p, q), 1e-10);
  }
}

TEST(Chordal, HalfOfSphereDistance) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_point(rng), q = random_point(rng);
    const auto s = p.sphere(), t = q.sphere();
    const double e = std::hypot(s[0] - t[0], s[1] - t[1], s[2] - t[2]);
    ASSERT_NEAR(chordal_dist(p, q), e / 2, 1e-12);
  }
}

TEST(SamplePoints, CardinalityAndDeterminism) {
  EXPECT_EQ(sample_points(1, 99).size(), 1u);
  const auto a = sample_points(1000, 42), b = sample_points(1000, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].h0(), b[i].h0());
    EXPECT_EQ(a[i].h1(), b[i].h1());
  }
}

TEST(SamplePoints, UniformMeanDistanceMatchesQuadrature) {
  const double exact = oracle::mean_chordal_quadrature();
  EXPECT_NEAR(exact, 2.0 / 3.0, 1e-10);
  const auto pts = sample_points(10000, 7);
  const auto ref = ProjPoint::from_affine(Complex(0.4, 0.1));
  double sum = 0;
  for (const auto& p : pts) {
    ASSERT_TRUE(canonical(p));
    sum += chordal_dist(p, ref);
  }
  EXPECT_NEAR(sum / pts.size(), exact, 0.05 * exact);
}

TEST(SamplePoints, NoNearDuplicates) {
  auto pts = sample_points(2000, 3);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) ASSERT_GT(chordal_dist(pts[i], pts[j]), 1e-10);
}

TEST(ExactScalar, ParsesLiterals) {
  const auto s = ExactScalar::parse("1/2", "-3/4");
  EXPECT_EQ(s.re(), mpq_class(1, 2));
  EXPECT_EQ(s.im(), mpq_class(-3, 4));
  EXPECT_EQ(ExactScalar::parse("0.25").re(), mpq_class(1, 4));
  EXPECT_EQ(ExactScalar::parse("4/8").re().get_den(), 2);
  EXPECT_THROW(ExactScalar::parse("1/0"), Error);
  EXPECT_THROW(ExactScalar::parse("abc"), Error);
}

TEST(ExactScalar, FieldOperations) {
  const ExactScalar a(mpq_class(1, 2), mpq_class(1)), b(mpq_class(-3), mpq_class(2, 3));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a * a.conj(), ExactScalar(a.norm(), 0));
}

TEST(ExactPoint, CanonicalEquality) {
  const ExactScalar two(2), i(0, 1);
  EXPECT_TRUE(ExactPoint::normalize(two, two * i) == ExactPoint::normalize(ExactScalar(1), i));
  EXPECT_TRUE(ExactPoint::normalize(two, 0) == ExactPoint::infinity());
}
