#include <gtest/gtest.h>

#include "semient/error.hpp"
#include "semient/mobius.hpp"
#include "semient/rational_map.hpp"
#include "support/oracles.hpp"
#include "support/random_maps.hpp"

using namespace semient;
using testutil::affine;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ZeroVector;
}

const ExactScalar I(0, 1);

}  // namespace

TEST(MakeMap, MonomialIsCanonical) {
  const auto f = RationalMap::make({1, 0, 0}, {0, 0, 1});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.to_string(), "[z0^2 : z1^2]");
}

TEST(MakeMap, RejectsCommonFactor) {
  EXPECT_EQ(code_of([] { RationalMap::make({0, 1, 0}, {0, 0, 1}); }), ErrorCode::CommonFactor);
}

TEST(MakeMap, RejectsDegenerateAndMismatched) {
  EXPECT_EQ(code_of([] { RationalMap::make({1, 0}, {0, 0}); }), ErrorCode::DegenerateMap);
  EXPECT_EQ(code_of([] { RationalMap::make({1, 0, 0}, {1, 0}); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([] { RationalMap::make({1}, {1}); }), ErrorCode::DegenerateMap);
}

TEST(MakeMap, AffineHomogenization) {
  // (2z + 1) / (z - 1) is the pair (2 z0 + z1, z0 - z1) up to scale.
  const auto f = affine({2, 1}, {1, -1});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_TRUE(maps_equal(f, RationalMap::make({2, 1}, {1, -1})));
  EXPECT_EQ(f.num()[0], ExactScalar(1));
  // Proportional to the hand homogenization.
  const ExactScalar s = f.num()[0] / ExactScalar(2);
  EXPECT_EQ(f.num()[1], s);
  EXPECT_EQ(f.den()[0], s);
  EXPECT_EQ(f.den()[1], -s);
}

TEST(Compose, Examples) {
  EXPECT_TRUE(maps_equal(compose(affine({1, 0, 0}), affine({1, 0, 0, 0})), affine({1, 0, 0, 0, 0, 0, 0})));
  EXPECT_TRUE(maps_equal(compose(affine({1, 1}), affine({2, 0})), affine({2, 1})));
}

TEST(Compose, PointwiseOracle) {
  const auto f = affine({1, 0, 1});
  const auto g = affine({1, -1}, {1, 1});
  const auto h = compose(f, g);
  EXPECT_EQ(h.degree(), 2);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 25; ++i) {
    const Complex z = testutil::random_point(rng).affine();
    const Complex w = (z - 1.0) / (z + 1.0);
    const auto expect = ProjPoint::from_affine(w * w + 1.0);
    EXPECT_LE(chordal_dist(evaluate(h, ProjPoint::from_affine(z)), expect), 1e-10);
  }
}

TEST(MapsEqual, Examples) {
  const auto f = RationalMap::make({1, 2, 0}, {0, 3, I});
  EXPECT_TRUE(maps_equal(f, RationalMap::make({3, 6, 0}, {0, 9, ExactScalar(3) * I})));
  EXPECT_FALSE(maps_equal(affine({1, 0, 0}), affine({1, 0, 0, 0})));
  const auto z2 = affine({1, 0, 0}), z4 = affine({1, 0, 0, 0, 0});
  EXPECT_TRUE(maps_equal(compose(z2, z4), compose(z4, z2)));
}

TEST(Evaluate, Examples) {
  const auto z2 = affine({1, 0, 0});
  EXPECT_LE(chordal_dist(evaluate(z2, ProjPoint::from_affine(2.0)), ProjPoint::from_affine(4.0)), 1e-15);
  EXPECT_TRUE(evaluate(z2, ProjPoint::infinity()).is_infinity());
  const auto m = affine({2, 1}, {1, -1});
  EXPECT_NEAR(std::abs(evaluate(m, ProjPoint::from_affine(3.0)).affine() - 3.5), 0, 1e-14);
  EXPECT_TRUE(evaluate(m, ExactPoint::from_affine(3)) == ExactPoint::from_affine(ExactScalar(mpq_class(7, 2), 0)));
  EXPECT_TRUE(evaluate(m, ExactPoint::from_affine(1)).is_infinity());
}

TEST(Evaluate, NearCancellation) {
  // z^2 - 1 near z = 1: the numerator cancels to about 2e-9.
  const auto f = affine({1, 0, -1});
  const double z = 1 + 1e-9;
  const auto out = evaluate(f, ProjPoint::from_affine(z));
  EXPECT_NEAR(out.affine().real() / ((z - 1) * (z + 1)), 1.0, 1e-6);
}

TEST(Preimages, SquareRoots) {
  const auto z2 = affine({1, 0, 0});
  auto r = preimages(z2, ProjPoint::from_affine(4.0));
  ASSERT_EQ(r.size(), 2u);
  std::vector<double> xs{r[0].point.affine().real(), r[1].point.affine().real()};
  std::sort(xs.begin(), xs.end());
  EXPECT_NEAR(xs[0], -2, 1e-12);
  EXPECT_NEAR(xs[1], 2, 1e-12);
  EXPECT_EQ(r[0].multiplicity + r[1].multiplicity, 2);
}

TEST(Preimages, CriticalValue) {
  auto r = preimages(affine({1, 0, 0}), ProjPoint::zero());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].multiplicity, 2);
  EXPECT_LE(chordal_dist(r[0].point, ProjPoint::zero()), 1e-12);
}

TEST(Preimages, CompanionMatrixOracle) {
  const auto f = affine({1, 0, -3, 0});
  auto r = preimages(f, ProjPoint::from_affine(1.0));
  const auto ref = oracle::companion_roots({1, 0, -3, -1});
  ASSERT_EQ(r.size(), 3u);
  for (const auto& z : ref) {
    double best = 1;
    for (const auto& x : r) best = std::min(best, chordal_dist(x.point, ProjPoint::from_affine(z)));
    EXPECT_LE(best, 1e-9);
  }
}

TEST(FsJacobian, Examples) {
  const ExactScalar rot(mpq_class(3, 5), mpq_class(4, 5));  // unit modulus
  EXPECT_NEAR(fs_jacobian(affine({rot, 0}), ProjPoint::zero()), 1.0, 1e-14);
  EXPECT_NEAR(fs_jacobian(affine({1, 0, 0}), ProjPoint::zero()), 0.0, 1e-14);
  EXPECT_NEAR(fs_jacobian(affine({1, 0, 0}), ProjPoint::from_affine(1.0)), 4.0, 1e-12);
}

TEST(Mobius, Classification) {
  EXPECT_EQ(classify_mobius(affine({1, 0})).kind, MobiusKind::Identity);
  const auto lox = classify_mobius(affine({2, 0}));
  EXPECT_EQ(lox.kind, MobiusKind::Loxodromic);
  ASSERT_EQ(lox.fixed_points.size(), 2u);
  ASSERT_TRUE(lox.multiplier.has_value());
  EXPECT_NEAR(std::abs(*lox.multiplier - Complex(2, 0)), 0, 1e-12);
  ASSERT_TRUE(lox.exact_fixed_points.has_value());
  const auto par = classify_mobius(affine({1, 1}));
  EXPECT_EQ(par.kind, MobiusKind::Parabolic);
  ASSERT_EQ(par.fixed_points.size(), 1u);
  EXPECT_TRUE(par.fixed_points[0].is_infinity());
  const ExactScalar rot(mpq_class(3, 5), mpq_class(4, 5));
  EXPECT_EQ(classify_mobius(affine({rot, 0})).kind, MobiusKind::Elliptic);
  EXPECT_EQ(code_of([] { classify_mobius(affine({1, 0, 0})); }), ErrorCode::NotMobius);
}

TEST(RootFinder, ExactSplitOfRationalRoots) {
  // (z - 1/2)^2 (z - i) (z - sqrt 2) is not exact; build the exact part only.
  const ExactForm a{1, ExactScalar(mpq_class(-1, 2), 0)};
  const ExactForm b{1, -I};
  const auto f = multiply(multiply(a, a), b);
  const auto split = solve_form_exact(f);
  EXPECT_TRUE(split.numeric.empty());
  int total = 0;
  for (const auto& r : split.exact) total += r.multiplicity;
  EXPECT_EQ(total, 3);
}

TEST(RootFinder, InfinityFromDegreeDeficiency) {
  // z1^2 (z0 - z1): roots infinity twice, 1 once.
  const auto r = solve_form(FloatForm{0, 0, 1, -1});
  int inf = 0, total = 0;
  for (const auto& x : r) {
    total += x.multiplicity;
    if (x.point.is_infinity()) inf += x.multiplicity;
  }
  EXPECT_EQ(total, 3);
  EXPECT_EQ(inf, 2);
}

TEST(BinaryForms, GcdAndDivision) {
  const ExactForm a{1, -1}, b{1, 2}, c{1, ExactScalar(0, 3)};
  const auto g = gcd(multiply(a, b), multiply(a, c));
  EXPECT_TRUE(divide_exact(g, a).has_value());
  EXPECT_EQ(g.size(), 2u);
  EXPECT_FALSE(divide_exact(b, a).has_value());
}

// Properties over random exact maps.

TEST(RatmapProperties, DegreeMultiplies) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const int df = 1 + rng() % 3, dg = 1 + rng() % 3;
    const auto f = testutil::random_map(rng, df), g = testutil::random_map(rng, dg);
    ASSERT_EQ(compose(f, g).degree(), df * dg);
  }
}

TEST(RatmapProperties, CompositionIsAssociative) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto f = testutil::random_map(rng, 1 + rng() % 2), g = testutil::random_map(rng, 1 + rng() % 2),
               h = testutil::random_map(rng, 1 + rng() % 2);
    ASSERT_TRUE(maps_equal(compose(compose(f, g), h), compose(f, compose(g, h))));
  }
}

TEST(RatmapProperties, PreimageMultiplicitiesSumToDegree) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto f = testutil::random_map(rng, 1 + rng() % 3);
    const auto q = testutil::random_point(rng);
    int total = 0;
    for (const auto& r : preimages(f, q)) {
      total += r.multiplicity;
      ASSERT_LE(chordal_dist(evaluate(f, r.point), q), 1e-9);
    }
    ASSERT_EQ(total, f.degree());
  }
}

TEST(RatmapProperties, EvaluateRespectsComposition) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto f = testutil::random_map(rng, 1 + rng() % 3), g = testutil::random_map(rng, 1 + rng() % 3);
    const auto fg = compose(f, g);
    for (int k = 0; k < 100; ++k) {
      const auto p = testutil::random_point(rng);
      ASSERT_LE(chordal_dist(evaluate(fg, p), evaluate(f, evaluate(g, p))), 1e-9);
    }
  }
}

TEST(RatmapProperties, JacobianChainRule) {
  std::mt19937_64 rng(14);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = testutil::random_map(rng, 1 + rng() % 3), g = testutil::random_map(rng, 1 + rng() % 3);
    const auto fg = compose(f, g);
    for (int k = 0; k < 100; ++k) {
      const auto p = testutil::random_point(rng);
      const double lhs = fs_jacobian(fg, p);
      const double rhs = fs_jacobian(f, evaluate(g, p)) * fs_jacobian(g, p);
      if (rhs < 1e-6) continue;  // relative error is meaningless at critical points
      ++checked;
      ASSERT_NEAR(lhs / rhs, 1.0, 1e-8);
    }
  }
  EXPECT_GT(checked, 9000);
}

TEST(RatmapProperties, JacobianMatchesFiniteDifferenceArea) {
  std::mt19937_64 rng(15);
  int checked = 0;
  while (checked < 50) {
    const auto f = testutil::random_map(rng, 1 + rng() % 3);
    const auto p = testutil::random_point(rng);
    const Complex z = p.affine();
    if (std::abs(z) > 5 || std::abs(z) < 0.05) continue;
    const double jac = fs_jacobian(f, p);
    if (jac < 1e-3 || jac > 1e3) continue;
    auto g = [&](Complex w) { return evaluate(f, ProjPoint::from_affine(w)).affine(); };
    if (std::abs(g(z)) > 1e3) continue;
    ASSERT_NEAR(oracle::fd_area_ratio(g, z) / jac, 1.0, 1e-4);
    ++checked;
  }
}
