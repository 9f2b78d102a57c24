// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <optional>

#include "test_support.hpp"

namespace chshkit {
namespace {

TEST(Interval, Basics) {
  const Interval i(-0.5, 0.25);
  EXPECT_EQ(i.width(), 0.75);
  EXPECT_EQ(i.midpoint(), -0.125);
  EXPECT_TRUE(i.contains(0.25));
  EXPECT_FALSE(i.contains(0.26));
  EXPECT_TRUE(i.contains(0.26, 0.02));
  EXPECT_THROW(Interval(0.1, 0.0), DomainError);
}

TEST(FeasibleBand, Origin) {
  const Interval b = feasible_band(AngleTriple(0, 0, 0));
  EXPECT_EQ(b.lo(), -1.0);
  EXPECT_EQ(b.hi(), -1.0);
}

TEST(FeasibleBand, AxisSingleton) {
  for (int k = 0; k <= 100; ++k) {
    const double t = kPi * k / 100.0;
    for (int axis = 0; axis < 3; ++axis) {
      const AngleTriple th(axis == 0 ? t : 0.0, axis == 1 ? t : 0.0, axis == 2 ? t : 0.0);
      const Interval b = feasible_band(th);
      ASSERT_NEAR(b.lo(), -std::cos(t), 1e-12) << t << " axis " << axis;
      ASSERT_NEAR(b.hi(), -std::cos(t), 1e-12) << t << " axis " << axis;
    }
  }
}

TEST(FeasibleBand, CentreIsFullRange) {
  const Interval b = feasible_band(AngleTriple(kPi / 2, kPi / 2, kPi / 2));
  EXPECT_NEAR(b.lo(), -1.0, 1e-15);
  EXPECT_NEAR(b.hi(), 1.0, 1e-15);
}

TEST(FeasibleBand, RejectsOutsideCube) {
  EXPECT_THROW(feasible_band(AngleTriple(0, 3.5, 0)), DomainError);
}

// Every f in a fine grid of [-1, 1] is tested against both CHSH
// inequalities; the band must be the hull of the admissible ones.
std::optional<std::pair<double, double>> brute_force_band(double c1, double c2, double c3,
                                                          int steps) {
  std::optional<std::pair<double, double>> out;
  for (int s = 0; s <= steps; ++s) {
    const double f = -1.0 + 2.0 * s / steps;
    const double l1 = std::abs(c1 + c2) + std::abs(c3 - f);
    const double l2 = std::abs(c1 - c2) + std::abs(c3 + f);
    if (l1 <= 2.0 + 1e-12 && l2 <= 2.0 + 1e-12) {
      if (!out) {
        out = {f, f};
      }
      out->second = f;
    }
  }
  return out;
}

TEST(FeasibleBand, MatchesBruteForce) {
  testing::Gen g(51);
  const int steps = 20000;
  const double step = 2.0 / steps;
  for (int i = 0; i < 300; ++i) {
    const AngleTriple th = g.triple();
    const Interval b = feasible_band(th);
    const auto bf = brute_force_band(-std::cos(th.theta1()), -std::cos(th.theta2()),
                                     -std::cos(th.theta3()), steps);
    if (!bf) {
      // The band is then narrower than the grid step.
      ASSERT_LT(b.width(), step);
      continue;
    }
    ASSERT_LE(b.lo(), bf->first + 1e-12);
    ASSERT_GT(b.lo(), bf->first - step);
    ASSERT_GE(b.hi(), bf->second - 1e-12);
    ASSERT_LT(b.hi(), bf->second + step);
  }
}

TEST(FeasibleBand, NonEmptyAndSymmetric) {
  testing::Gen g(52);
  for (int i = 0; i < 20000; ++i) {
    const AngleTriple th = g.triple();
    const Interval b = feasible_band(th);
    ASSERT_LE(b.lo(), b.hi());
    ASSERT_GE(b.lo(), -1.0);
    ASSERT_LE(b.hi(), 1.0);
    const Interval swapped = feasible_band(AngleTriple(th.theta2(), th.theta1(), th.theta3()));
    ASSERT_EQ(b.lo(), swapped.lo());
    ASSERT_EQ(b.hi(), swapped.hi());
  }
}

TEST(FeasibleBand, DiagonalValueAdmissible) {
  for (int k = 0; k <= 1000; ++k) {
    const double t = kPi * k / 1000.0;
    ASSERT_TRUE(feasible_band(AngleTriple(t, t, t)).contains(-std::cos(t), 1e-12)) << t;
  }
}

TEST(BandMap, ResolutionTwo) {
  const auto rows = band_map(2);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows.front().theta, AngleTriple(0, 0, 0));
  EXPECT_EQ(rows.front().band.width(), 0.0);
  EXPECT_EQ(rows.front().band.lo(), -1.0);
  EXPECT_EQ(rows.back().theta, AngleTriple(kPi, kPi, kPi));
  EXPECT_EQ(rows.back().band.lo(), 1.0);
  EXPECT_EQ(rows.back().band.hi(), 1.0);
  // theta1-major: the last coordinate varies fastest.
  EXPECT_EQ(rows[1].theta, AngleTriple(0, 0, kPi));
  EXPECT_EQ(rows[4].theta, AngleTriple(kPi, 0, 0));
}

TEST(BandMap, ResolutionTwentyFive) {
  const auto rows = band_map(25);
  ASSERT_EQ(rows.size(), 15625u);
  double widest = 0.0;
  for (const auto& row : rows) {
    widest = std::max(widest, row.band.width());
    ASSERT_EQ(row.band, feasible_band(row.theta));
  }
  EXPECT_NEAR(widest, 2.0, 1e-12);
  const auto& centre = rows[(12 * 25 + 12) * 25 + 12];
  EXPECT_NEAR(centre.theta.theta1(), kPi / 2, 1e-15);
  EXPECT_NEAR(centre.theta.theta3(), kPi / 2, 1e-15);
  EXPECT_NEAR(centre.band.width(), 2.0, 1e-12);
}

TEST(BandMap, RejectsTinyResolution) {
  EXPECT_THROW(band_map(1), DomainError);
}

}  // namespace
}  // namespace chshkit
