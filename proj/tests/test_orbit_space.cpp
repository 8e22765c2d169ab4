#include <gtest/gtest.h>

#include "semient/error.hpp"
#include "semient/orbit.hpp"
#include "support/random_maps.hpp"

using namespace semient;
using testutil::affine;

namespace {

RationalMap zpow(int d) {
  std::vector<ExactScalar> c(d + 1, ExactScalar(0));
  c[0] = 1;
  return affine(c);
}

Correspondence corr(std::vector<RationalMap> maps) { return build_correspondence(GeneratorSet(std::move(maps))); }

TruncatedPath random_path(std::mt19937_64& rng, int depth, int symbols) {
  TruncatedPath p;
  for (int k = 0; k <= depth; ++k) p.orbit.points.push_back(testutil::random_point(rng));
  for (int k = 0; k < depth; ++k) p.orbit.symbols.push_back(static_cast<int>(rng() % symbols));
  return p;
}

// max over k of D(x_k, y_k) / 2^((k - n)+) and the symbol analogue.
double truncated_sup(const TruncatedPath& p, const TruncatedPath& q, int n) {
  double out = 0;
  for (int k = 0; k <= p.depth(); ++k) {
    const double w = std::ldexp(1.0, -std::max(k - n, 0));
    out = std::max(out, chordal_dist(p.orbit.points[k], q.orbit.points[k]) * w);
    if (k < p.depth() && p.orbit.symbols[k] != q.orbit.symbols[k]) out = std::max(out, w);
  }
  return out;
}

}  // namespace

TEST(ForwardOrbits, Cardinalities) {
  const auto single = forward_orbits(corr({zpow(2)}), {ProjPoint::from_affine(0.5)}, 5);
  EXPECT_EQ(single.size(), 1u);
  std::mt19937_64 rng(1);
  std::vector<ProjPoint> starts{testutil::random_point(rng), testutil::random_point(rng), testutil::random_point(rng)};
  EXPECT_EQ(forward_orbits(corr({zpow(2), zpow(3)}), starts, 4).size(), 48u);
}

TEST(ForwardOrbits, HandEvaluation) {
  const auto pool = forward_orbits(corr({zpow(2), zpow(3)}), {ProjPoint::from_affine(2.0)}, 2);
  bool found = false;
  for (const auto& o : pool.orbits())
    if (o.symbols == std::vector<int>{0, 1}) {
      found = true;
      EXPECT_NEAR(std::abs(o.points[1].affine() - 4.0), 0, 1e-12);
      EXPECT_NEAR(std::abs(o.points[2].affine() - 64.0), 0, 1e-10);
    }
  EXPECT_TRUE(found);
}

TEST(ForwardOrbits, Budget) {
  try {
    forward_orbits(corr({zpow(2), zpow(3)}), {ProjPoint::zero()}, 10, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(PreimageTree, Examples) {
  const auto a = preimage_tree(corr({zpow(2)}), ProjPoint::from_affine(4.0), 1);
  ASSERT_EQ(a.size(), 2u);
  std::vector<double> starts{a.point(0, 0).affine().real(), a.point(1, 0).affine().real()};
  std::sort(starts.begin(), starts.end());
  EXPECT_NEAR(starts[0], -2, 1e-12);
  EXPECT_NEAR(starts[1], 2, 1e-12);
  const auto t = ProjPoint::from_affine(Complex(0.3, 0.7));
  EXPECT_EQ(preimage_tree(corr({zpow(2)}), t, 3).total_weight(), 8);
  const auto two = preimage_tree(corr({zpow(2), zpow(3)}), t, 2);
  EXPECT_EQ(two.total_weight(), 25);
  std::map<std::vector<int>, int> per_word;
  for (std::size_t i = 0; i < two.size(); ++i) per_word[{two.symbol(i, 0), two.symbol(i, 1)}] += two.weight(i);
  EXPECT_EQ(per_word[(std::vector<int>{0, 0})], 4);
  EXPECT_EQ(per_word[(std::vector<int>{0, 1})], 6);
  EXPECT_EQ(per_word[(std::vector<int>{1, 0})], 6);
  EXPECT_EQ(per_word[(std::vector<int>{1, 1})], 9);
}

TEST(PreimageTree, CriticalTerminalIsPerturbedOrReported) {
  PreimageTreeOptions opt;
  opt.retries = 0;
  try {
    preimage_tree(corr({zpow(2)}), ProjPoint::zero(), 2, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonGenericTerminal);
  }
  const auto pool = preimage_tree(corr({zpow(2)}), ProjPoint::zero(), 2);
  EXPECT_EQ(pool.total_weight(), 4);
}

TEST(PreimageTree, JacobianFloorKeepsOneLowBranch) {
  PreimageTreeOptions opt;
  opt.jac_floor = 1e9;  // every preimage is "low"
  const auto pool = preimage_tree(corr({zpow(2), zpow(3)}), ProjPoint::from_affine(Complex(0.3, 0.7)), 3, opt);
  EXPECT_EQ(pool.size(), 8u);  // one orbit per word
}

TEST(Shift, Examples) {
  const auto a = ProjPoint::from_affine(1.0), b = ProjPoint::from_affine(2.0), c = ProjPoint::from_affine(3.0);
  const TruncatedPath p{{{a, b, c}, {0, 1}}};
  const auto s = shift(p);
  ASSERT_EQ(s.depth(), 1);
  EXPECT_EQ(s.orbit.points[0].h0(), b.h0());
  EXPECT_EQ(s.orbit.symbols, std::vector<int>{1});
  const TruncatedPath fixed{{{ProjPoint::zero(), ProjPoint::zero(), ProjPoint::zero()}, {0, 0}}};
  EXPECT_EQ(shift(fixed).depth(), 1);
  EXPECT_THROW(shift(TruncatedPath{{{a}, {}}}), Error);
}

TEST(Shift, TwiceDropsTwoSteps) {
  std::mt19937_64 rng(3);
  const auto p = random_path(rng, 5, 3);
  const auto s = shift(shift(p));
  ASSERT_EQ(s.depth(), 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(s.orbit.points[k].h1(), p.orbit.points[k + 2].h1());
  for (int k = 0; k < 3; ++k) EXPECT_EQ(s.orbit.symbols[k], p.orbit.symbols[k + 2]);
}

TEST(DeltaMetric, Examples) {
  std::mt19937_64 rng(4);
  const auto p = random_path(rng, 4, 2);
  EXPECT_EQ(delta_metric(p, p), 0.0);
  auto q = p;
  q.orbit.symbols[0] = 1 - q.orbit.symbols[0];
  EXPECT_EQ(delta_metric(p, q), 1.0);
  // Points differing only at x_3 by chordal 0.4.
  TruncatedPath r = p, s = p;
  r.orbit.symbols.assign(4, 0);
  s.orbit.symbols.assign(4, 0);
  r.orbit.points[3] = ProjPoint::zero();
  s.orbit.points[3] = point_at_distance(ProjPoint::zero(), 0.4, 0.0);
  EXPECT_NEAR(delta_metric(r, s), 0.05, 1e-15);
  EXPECT_THROW(delta_metric(p, random_path(rng, 3, 2)), Error);
}

// Properties.

TEST(OrbitProperties, BowenClosedFormMatchesShifts) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const int depth = 2 + rng() % 6;
    const auto p = random_path(rng, depth, 2), q = random_path(rng, depth, 2);
    for (int n = 0; n <= depth - 1; ++n) {
      double via_shifts = 0;
      auto a = p, b = q;
      for (int j = 0; j <= n; ++j) {
        via_shifts = std::max(via_shifts, delta_metric(a, b));
        if (j < n) {
          a = shift(a);
          b = shift(b);
        }
      }
      ASSERT_EQ(via_shifts, truncated_sup(p, q, n));
      ASSERT_EQ(bowen_delta(p, q, n), via_shifts);
    }
  }
}

TEST(OrbitProperties, GeneratedOrbitsAreConsistent) {
  std::mt19937_64 rng(6);
  const auto c = corr({affine({1, 0, 1}), affine({2, 1}, {1, -1}), zpow(3)});
  const auto starts = sample_points(20, 9);
  for (const auto& o : forward_orbits(c, starts, 3).orbits()) ASSERT_TRUE(is_consistent(c, o));
  for (const auto& o : forward_orbits_sampled(c, starts, 6, 5, 1).orbits()) ASSERT_TRUE(is_consistent(c, o));
  for (int t = 0; t < 5; ++t)
    for (const auto& o : preimage_tree(c, testutil::random_point(rng), 3).orbits()) ASSERT_TRUE(is_consistent(c, o));
}

TEST(OrbitProperties, TreeWeightIsTopDegreePower) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    std::vector<RationalMap> gens{testutil::random_map(rng, 1 + rng() % 2), testutil::random_map(rng, 1 + rng() % 3)};
    if (maps_equal(gens[0], gens[1])) continue;
    const auto c = build_correspondence(GeneratorSet(gens), {1, 1 + (std::int64_t)(rng() % 2)});
    const int nu = 1 + rng() % 3;
    const auto pool = preimage_tree(c, testutil::random_point(rng), nu);
    ASSERT_EQ(pool.total_weight(), static_cast<std::int64_t>(std::pow(d_top(c), nu)));
  }
}

TEST(OrbitProperties, TreeOrbitsReplayForward) {
  std::mt19937_64 rng(8);
  const auto c = corr({affine({1, 0, -1}), zpow(3)});
  const auto comps = c.symbol_components();
  for (int t = 0; t < 10; ++t) {
    const auto pool = preimage_tree(c, testutil::random_point(rng), 3);
    for (const auto& o : pool.orbits()) {
      auto x = o.points[0];
      for (int k = 0; k < o.nu(); ++k) {
        x = evaluate(c.components()[comps[o.symbols[k]]].map, x);
        ASSERT_LE(chordal_dist(x, o.points[k + 1]), 1e-8);
      }
    }
  }
}

TEST(OrbitPool, TruncateAndSelect) {
  const auto pool = forward_orbits(corr({zpow(2), zpow(3)}), sample_points(3, 1), 3);
  const auto t = pool.truncate(2);
  EXPECT_EQ(t.nu(), 2);
  EXPECT_EQ(t.size(), pool.size());
  const auto s = pool.select({2, 0});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.symbol(0, 2), pool.symbol(2, 2));
}
