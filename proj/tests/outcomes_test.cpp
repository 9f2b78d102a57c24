// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "test_support.hpp"

namespace chshkit {
namespace {

TEST(OutcomeSequence, Validation) {
  EXPECT_THROW(OutcomeSequence({}), DomainError);
  EXPECT_THROW(OutcomeSequence({1, 0, -1}), DomainError);
  EXPECT_THROW(OutcomeSequence(std::vector<std::int8_t>{1, 2}), DomainError);
  const OutcomeSequence s{1, -1, 1};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.negated(), (OutcomeSequence{-1, 1, -1}));
}

TEST(EmpiricalCorrelation, Examples) {
  EXPECT_EQ(empirical_correlation({1, 1, 1}, {1, 1, 1}), 1.0);
  EXPECT_EQ(empirical_correlation({1, -1}, {-1, 1}), -1.0);
  EXPECT_EQ(empirical_correlation({1, 1, -1, -1}, {1, -1, 1, -1}), 0.0);
}

TEST(EmpiricalCorrelation, LengthMismatch) {
  EXPECT_THROW(empirical_correlation({1, 1}, {1}), ShapeError);
}

TEST(EmpiricalCorrelation, SymmetryAndSignFlip) {
  testing::Gen g(21);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 300));
    const auto u = g.sequence(n);
    const auto v = g.sequence(n);
    const double c = empirical_correlation(u, v);
    ASSERT_EQ(c, empirical_correlation(v, u));
    ASSERT_EQ(empirical_correlation(u.negated(), v), -c);
    ASSERT_LE(std::abs(c), 1.0);
  }
}

// Uniform marginals plus E[ab] = c pin the joint table; solve the moment
// system directly.
JointDistribution2 moment_oracle(double c) {
  Eigen::Matrix4d m;
  m << 1, 1, 1, 1,    // normalisation
      1, 1, 0, 0,     // P(a = +1)
      1, 0, 1, 0,     // P(b = +1)
      1, -1, -1, 1;   // E[ab]
  const Eigen::Vector4d rhs(1.0, 0.5, 0.5, c);
  const Eigen::Vector4d p = m.fullPivLu().solve(rhs);
  return {p[0], p[1], p[2], p[3]};
}

TEST(SingletJoint, ClosedFormExamples) {
  const auto a = singlet_joint(0.0);
  EXPECT_EQ(a.p_pp, 0.0);
  EXPECT_EQ(a.p_mm, 0.0);
  EXPECT_EQ(a.p_pm, 0.5);
  EXPECT_EQ(a.p_mp, 0.5);

  const auto b = singlet_joint(kPi / 2);
  for (double p : {b.p_pp, b.p_pm, b.p_mp, b.p_mm}) {
    EXPECT_NEAR(p, 0.25, 1e-15);
  }

  const auto c = singlet_joint(kPi);
  EXPECT_EQ(c.p_pp, 0.5);
  EXPECT_EQ(c.p_mm, 0.5);
  EXPECT_EQ(c.p_pm, 0.0);
  EXPECT_EQ(c.p_mp, 0.0);
}

TEST(SingletJoint, MatchesMomentSystem) {
  testing::Gen g(22);
  for (int i = 0; i < 1000; ++i) {
    const double t = g.uniform(-10.0, 10.0);
    const auto p = singlet_joint(t);
    const auto q = moment_oracle(-std::cos(t));
    ASSERT_TRUE(p.is_valid());
    ASSERT_NEAR(p.p_pp, q.p_pp, 1e-12);
    ASSERT_NEAR(p.p_pm, q.p_pm, 1e-12);
    ASSERT_NEAR(p.p_mp, q.p_mp, 1e-12);
    ASSERT_NEAR(p.p_mm, q.p_mm, 1e-12);
    ASSERT_NEAR(p.expected_product(), twisted_malus(t), 1e-12);
  }
}

TEST(JointDistribution2, Validation) {
  EXPECT_TRUE(JointDistribution2{}.is_valid());
  EXPECT_FALSE((JointDistribution2{0.5, 0.0, 0.0, 0.5 + 1e-9}.is_valid()));
  EXPECT_FALSE((JointDistribution2{0.5, 0.5, 0.0, 0.0}.is_valid()));
  EXPECT_THROW((JointDistribution2{-0.1, 0.6, 0.6, -0.1}.validate()), DomainError);
}

}  // namespace
}  // namespace chshkit
