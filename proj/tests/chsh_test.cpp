// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace chshkit {
namespace {

const double kHalfRoot2 = std::sqrt(2.0) / 2.0;

TEST(Boole, AllOnes) {
  const OutcomeSequence one{1};
  const auto r = boole_check(one, one, one, one);
  EXPECT_EQ(r.lhs1, 2.0);
  EXPECT_EQ(r.lhs2, 2.0);
  EXPECT_TRUE(r.holds);
}

TEST(Boole, MixedPairs) {
  const OutcomeSequence u{1, -1};
  const OutcomeSequence x{1, 1};
  const OutcomeSequence y{-1, -1};
  const auto r = boole_check(u, x, u, y);
  // <u,x> = <v,x> = <u,y> = <v,y> = 0
  EXPECT_EQ(r.lhs1, 0.0);
  EXPECT_EQ(r.lhs2, 0.0);
  EXPECT_TRUE(r.holds);

  const auto s = boole_check(OutcomeSequence{1, 1}, x, OutcomeSequence{1, 1}, y);
  EXPECT_EQ(s.lhs1, 2.0);
  EXPECT_EQ(s.lhs2, 2.0);
}

TEST(Boole, LengthMismatch) {
  EXPECT_THROW(boole_check({1}, {1}, {1, 1}, {1}), ShapeError);
}

TEST(Boole, ExhaustiveLengthTwo) {
  int checked = 0;
  for (int bits = 0; bits < 256; ++bits) {
    auto seq = [&](int k) {
      const int lo = (bits >> (2 * k)) & 1;
      const int hi = (bits >> (2 * k + 1)) & 1;
      return OutcomeSequence{lo ? -1 : 1, hi ? -1 : 1};
    };
    const auto r = boole_check(seq(0), seq(1), seq(2), seq(3));
    ASSERT_TRUE(r.holds) << bits;
    ASSERT_LE(r.lhs1, 2.0);
    ASSERT_LE(r.lhs2, 2.0);
    ++checked;
  }
  EXPECT_EQ(checked, 256);
}

TEST(Boole, RandomSequences) {
  testing::Gen g(41);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 400));
    const auto r = boole_check(g.sequence(n), g.sequence(n), g.sequence(n), g.sequence(n));
    ASSERT_TRUE(r.holds);
    ASSERT_LE(r.lhs1, 2.0 + kInequalityTolerance);
    ASSERT_LE(r.lhs2, 2.0 + kInequalityTolerance);
  }
}

TEST(ChshValue, Examples) {
  EXPECT_EQ(chsh_value({-1, -1, -1, -1}), 2.0);
  EXPECT_NEAR(chsh_value({kHalfRoot2, -kHalfRoot2, -kHalfRoot2, -kHalfRoot2}),
              2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(chsh_value({0, 0, 0, 0}), 0.0);
}

TEST(ChshValue, RejectsOutOfRange) {
  EXPECT_THROW(chsh_value({1.5, 0, 0, 0}), DomainError);
  EXPECT_THROW(polytope_member({0, 0, 0, -1.01}), DomainError);
}

TEST(ChshValue, BoundedAndSignInvariant) {
  testing::Gen g(42);
  for (int i = 0; i < 10000; ++i) {
    const CorrelationVector c{g.correlation(), g.correlation(), g.correlation(),
                              g.correlation()};
    const double v = chsh_value(c);
    ASSERT_LE(v, 4.0);
    ASSERT_EQ(v, chsh_value({-c.c1, -c.c2, -c.c3, -c.c4}));
  }
}

TEST(PolytopeMember, Examples) {
  EXPECT_TRUE(polytope_member({-1, -1, -1, -1}));
  EXPECT_FALSE(polytope_member({kHalfRoot2, -kHalfRoot2, -kHalfRoot2, -kHalfRoot2}));
  EXPECT_TRUE(polytope_member({0, 0, 0, 0}));
  EXPECT_TRUE(polytope_member({1, 1, 1, 1 - 0.5e-12}));
}

TEST(CorrelationsFromAngles, Examples) {
  const auto origin = correlations_from_angles(AngleTriple(0, 0, 0), F4Candidate::product());
  EXPECT_EQ(origin.c1, -1.0);
  EXPECT_EQ(origin.c2, -1.0);
  EXPECT_EQ(origin.c3, -1.0);
  EXPECT_EQ(origin.c4, -1.0);

  const auto right = correlations_from_angles(AngleTriple(kPi / 2, kPi / 2, kPi / 2),
                                              F4Candidate::locality());
  for (double c : {right.c1, right.c2, right.c3, right.c4}) {
    EXPECT_NEAR(c, 0.0, 1e-15);
  }

  const auto bell = correlations_from_angles(AngleTriple(3 * kPi / 4, kPi / 4, kPi / 4),
                                             F4Candidate::locality());
  EXPECT_NEAR(bell.c1, kHalfRoot2, 1e-15);
  EXPECT_NEAR(bell.c2, -kHalfRoot2, 1e-15);
  EXPECT_NEAR(bell.c3, -kHalfRoot2, 1e-15);
  EXPECT_NEAR(bell.c4, -kHalfRoot2, 1e-15);
  EXPECT_NEAR(chsh_value(bell), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(polytope_member(bell));
}

TEST(CorrelationsFromAngles, RejectsOutsideCube) {
  EXPECT_THROW(correlations_from_angles(AngleTriple(-0.1, 0, 0), F4Candidate::product()),
               DomainError);
}

TEST(CorrelationsFromAngles, MembershipMatchesBandOnGrid) {
  const int r = 25;
  for (const auto& cand : {F4Candidate::locality(), F4Candidate::product(),
                           F4Candidate::product_diagonal()}) {
    bool any_outside = false;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
          const AngleTriple th(grid_node(i, r), grid_node(j, r), grid_node(k, r));
          const bool member = polytope_member(correlations_from_angles(th, cand));
          const bool in_band = feasible_band(th).contains(cand.eval(th), 1e-9);
          ASSERT_EQ(member, in_band) << cand.name() << " " << i << "," << j << "," << k;
          any_outside = any_outside || !member;
        }
      }
    }
    EXPECT_EQ(any_outside, cand.kind() == CandidateKind::locality) << cand.name();
  }
}

}  // namespace
}  // namespace chshkit
