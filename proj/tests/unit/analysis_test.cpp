#include <gtest/gtest.h>

#include <ordlines/ordlines.hpp>

#include "support/oracle.hpp"

namespace ordlines {
namespace {

TEST(Analysis, ConstantsOnAlphaGrid) {
  for (long i = 1; i <= 99; ++i) {
    Rational alpha(i, 100);
    alpha.canonicalize();
    const BoundConstants c = bound_constants(alpha, kBeckBeta, kBeckGamma);
    EXPECT_LT(c.mu, alpha) << alpha;
    EXPECT_LT(alpha, c.nu) << alpha;
    EXPECT_GT(c.d_alpha, 0) << alpha;
    EXPECT_LE(c.d_alpha, c.d_case1);
    EXPECT_LE(c.d_alpha, c.d_case2a);
    EXPECT_LE(c.d_alpha, c.d_case2b);
    EXPECT_EQ(c.alpha0, Rational(2, 27));
  }
}

TEST(Analysis, GammaPrimeIsMinimum) {
  // beta' = 1/2: gamma (1/4) = 1/36 against beta^2 / 4 = 1/9.
  EXPECT_EQ(gamma_prime(Rational(1, 2), kBeckBeta, kBeckGamma), Rational(1, 36));
  EXPECT_EQ(gamma_prime(Rational(0), kBeckBeta, kBeckGamma), Rational(1, 9));
}

TEST(Analysis, SylvesterGallaiOnRandomRationalSets) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const PointSet set = gen_random(3 + seed % 10, 2, 2, seed);
    if (all_collinear(set)) continue;
    const SylvesterGallaiReport r = verify_sylvester_gallai(set);
    EXPECT_TRUE(r.holds) << set.label();
    EXPECT_GE(r.ordinary, 1u);
    ASSERT_TRUE(r.witness.has_value());
    std::size_t on = 0;
    for (const auto& p : set) on += incident(*r.witness, p);
    EXPECT_EQ(on, 2u);
  }
}

TEST(Analysis, SkewBoundOnSupersets) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + rng.index(6);
    const PointSet base = gen_two_skew(m);
    std::vector<Point> pts(base.begin(), base.end());
    const std::size_t extra = rng.index(6);
    while (pts.size() < 2 * m + extra) {
      Point p = affine(rng.rational(3), rng.rational(3), rng.rational(3));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    const PointSet set(std::move(pts));
    const SkewBoundReport r = verify_skew_bound(set, canon_line3(base[0], base[1]), canon_line3(base[m], base[m + 1]));
    EXPECT_TRUE(r.holds) << "m=" << m << " extra=" << extra;
    EXPECT_EQ(r.lhs, span_summary(set).ordinary);
    EXPECT_GE(r.on_first, m);
    EXPECT_GE(r.on_second, m);
  }
}

TEST(Analysis, AlmostCoplanarReportsOnConstructions) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{10, 2}, {20, 3}, {30, 3}}) {
    const AlmostCoplanarReport r = verify_almost_coplanar(gen_near_coplanar(n, k, 2), k);
    Rational bound = (Rational(k) + Rational(1, 2)) * Rational(n - k) - Rational(k * (k - 1) / 2);
    EXPECT_EQ(r.bound, bound);
    EXPECT_EQ(r.max_coplanar, n - k);
    EXPECT_FALSE(r.caveat.empty());
    EXPECT_EQ(r.holds, Rational(r.count) >= r.bound);
  }
}

TEST(Analysis, BeckOnGeneralPosition) {
  const BeckReport r = beck_report(gen_random(8, 3, 1000, 4));
  EXPECT_EQ(r.num_lines, 28u);
  EXPECT_TRUE(r.beta_hypothesis);
  EXPECT_TRUE(r.gamma_reached);
}

}  // namespace
}  // namespace ordlines
