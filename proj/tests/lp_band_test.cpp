// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "test_support.hpp"

namespace chshkit {
namespace {

void expect_moments(const JointDistribution4& d, double c1, double c2, double c3,
                    double c4, double tol) {
  ASSERT_TRUE(d.is_valid());
  EXPECT_NEAR(d.moment(Slot::a_oo, Slot::b_oo), c1, tol);
  EXPECT_NEAR(d.moment(Slot::a_bo, Slot::b_oo), c2, tol);
  EXPECT_NEAR(d.moment(Slot::a_oo, Slot::b_ob), c3, tol);
  EXPECT_NEAR(d.moment(Slot::a_bo, Slot::b_ob), c4, tol);
}

TEST(LpBand, AllAnticorrelated) {
  const auto r = lp_band(-1, -1, -1);
  ASSERT_TRUE(r);
  EXPECT_NEAR(r->min_value, -1.0, 1e-12);
  EXPECT_NEAR(r->max_value, -1.0, 1e-12);
}

TEST(LpBand, Centre) {
  const auto r = lp_band(0, 0, 0);
  ASSERT_TRUE(r);
  EXPECT_NEAR(r->min_value, -1.0, 1e-12);
  EXPECT_NEAR(r->max_value, 1.0, 1e-12);
}

TEST(LpBand, AxisSingleton) {
  const double t = kPi / 3;
  const auto r = lp_band(-std::cos(t), -1, -1);
  ASSERT_TRUE(r);
  EXPECT_NEAR(r->min_value, -0.5, 1e-12);
  EXPECT_NEAR(r->max_value, -0.5, 1e-12);
}

TEST(LpBand, RejectsOutOfRange) {
  EXPECT_THROW(lp_band(1.2, 0, 0), DomainError);
  EXPECT_THROW(lp_band(0, std::nan(""), 0), DomainError);
}

TEST(LpBand, WitnessesAttainExtremes) {
  testing::Gen g(61);
  for (int i = 0; i < 200; ++i) {
    const double c1 = g.correlation();
    const double c2 = g.correlation();
    const double c3 = g.correlation();
    const auto r = lp_band(c1, c2, c3);
    ASSERT_TRUE(r);
    expect_moments(r->witness_min, c1, c2, c3, r->min_value, 1e-9);
    expect_moments(r->witness_max, c1, c2, c3, r->max_value, 1e-9);
  }
}

TEST(LpBand, AgreesWithClosedFormOnCosines) {
  testing::Gen g(62);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 200; ++i) {
    const AngleTriple th = g.triple();
    const Interval b = feasible_band(th);
    const auto r = lp_band(-std::cos(th.theta1()), -std::cos(th.theta2()),
                           -std::cos(th.theta3()));
    ASSERT_TRUE(r);
    ASSERT_NEAR(r->min_value, b.lo(), 1e-7);
    ASSERT_NEAR(r->max_value, b.hi(), 1e-7);
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(LpBand, AgreesWithClosedFormOnArbitraryTriples) {
  testing::Gen g(63);
  for (int i = 0; i < 500; ++i) {
    const double c1 = g.correlation();
    const double c2 = g.correlation();
    const double c3 = g.correlation();
    const Interval b = feasible_band(
        AngleTriple(std::acos(-c1), std::acos(-c2), std::acos(-c3)));
    const auto r = lp_band(c1, c2, c3);
    ASSERT_TRUE(r);
    ASSERT_NEAR(r->min_value, b.lo(), 1e-7);
    ASSERT_NEAR(r->max_value, b.hi(), 1e-7);
  }
}

TEST(LpBand, CornerTriples) {
  for (double c1 : {-1.0, 1.0}) {
    for (double c2 : {-1.0, 1.0}) {
      for (double c3 : {-1.0, 1.0}) {
        const auto r = lp_band(c1, c2, c3);
        ASSERT_TRUE(r);
        // Deterministic +-1 variables: c4 = c2 c3 / c1.
        EXPECT_NEAR(r->min_value, c2 * c3 * c1, 1e-12);
        EXPECT_NEAR(r->max_value, c2 * c3 * c1, 1e-12);
      }
    }
  }
}

TEST(FeasibleDistribution, CornerIsUniformOverConsistentPatterns) {
  const auto d = feasible_distribution(-1, -1, -1, -1);
  // a_oo = -b_oo = a_bo = -b_ob: patterns (+,-,+,-) and (-,+,-,+).
  for (std::size_t i = 0; i < 16; ++i) {
    const double expected = (i == 0b0101 || i == 0b1010) ? 0.5 : 0.0;
    EXPECT_NEAR(d.p[i], expected, 1e-12) << i;
  }
  expect_moments(d, -1, -1, -1, -1, 1e-12);
}

TEST(FeasibleDistribution, CentreMatchesMoments) {
  expect_moments(feasible_distribution(0, 0, 0, 0), 0, 0, 0, 0, 1e-9);
}

TEST(FeasibleDistribution, OutsideBandIsInfeasible) {
  EXPECT_THROW(feasible_distribution(0, 0, 0, 1.5), InfeasibleError);
  EXPECT_THROW(feasible_distribution(-1, -1, -1, -0.9), InfeasibleError);
}

TEST(FeasibleDistribution, InteriorPointsMatchMoments) {
  testing::Gen g(64);
  for (int i = 0; i < 300; ++i) {
    const AngleTriple th = g.triple();
    const Interval b = feasible_band(th);
    const double f = b.lo() + g.uniform(0.0, 1.0) * b.width();
    const double c1 = -std::cos(th.theta1());
    const double c2 = -std::cos(th.theta2());
    const double c3 = -std::cos(th.theta3());
    expect_moments(feasible_distribution(c1, c2, c3, f), c1, c2, c3, f, 1e-9);
  }
}

}  // namespace
}  // namespace chshkit
