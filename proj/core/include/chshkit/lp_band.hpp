// SPDX-License-Identifier: Apache-2.0

// Linear-programming route to the F4 band, independent of the closed form in
// band.hpp.
//
// Variables are the 16 probabilities of a JointDistribution4. Constraints fix
// the normalization and the three known moments E[a_oo b_oo] = c1,
// E[a_bo b_oo] = c2, E[a_oo b_ob] = c3; the objective is E[a_bo b_ob]. With
// four equality rows every vertex of the feasible set is a basic solution
// supported on four columns, so enumerating all C(16, 4) = 1820 column subsets
// finds both optima exactly.

#pragma once

#include <optional>

#include "chshkit/sampler.hpp"

namespace chshkit {

struct LpResult {
  double min_value = 0.0;
  double max_value = 0.0;
  JointDistribution4 witness_min;
  JointDistribution4 witness_max;
};

/// Pivot threshold below which a basis is treated as singular.
inline constexpr double kPivotTolerance = 1e-10;

/// Extremes of E[a_bo b_ob] subject to the three moment constraints, or
/// std::nullopt when no distribution reproduces (c1, c2, c3). Throws
/// DomainError if an input is non-finite or outside [-1, 1].
std::optional<LpResult> lp_band(double c1, double c2, double c3);

/// A distribution with moments (c1, c2, c3, f) in the slot order of
/// CorrelationVector. Built as the convex combination of the two LP witnesses
/// that hits f, then symmetrized under the global sign flip (which preserves
/// every pairwise moment and makes all marginals uniform). Throws
/// InfeasibleError if f lies outside the LP band (tolerance 1e-9) or the
/// constraints are infeasible.
JointDistribution4 feasible_distribution(double c1, double c2, double c3,
                                         double f);

}  // namespace chshkit
