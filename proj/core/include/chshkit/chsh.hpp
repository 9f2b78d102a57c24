// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "chshkit/angles.hpp"
#include "chshkit/candidate.hpp"
#include "chshkit/outcomes.hpp"

namespace chshkit {

/// Slack allowed on every "<= 2" check; values in (2, 2 + eps] still hold.
inline constexpr double kInequalityTolerance = 1e-12;

struct BooleResult {
  double lhs1 = 0.0;  // |<u,x> + <v,x>| + |<u,y> - <v,y>|
  double lhs2 = 0.0;  // |<u,x> - <v,x>| + |<u,y> + <v,y>|
  bool holds = false;
};

/// Both Boole inequalities on four equal-length +/-1 sequences. Throws
/// ShapeError on a length mismatch.
BooleResult boole_check(const OutcomeSequence& u, const OutcomeSequence& x,
                        const OutcomeSequence& v, const OutcomeSequence& y);

/// (<a_oo,b_oo>, <a_bo,b_oo>, <a_oo,b_ob>, <a_bo,b_ob>).
struct CorrelationVector {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;

  /// Throws DomainError if any component is non-finite or outside [-1, 1].
  void validate() const;
};

/// max(|c1 + c2| + |c3 - c4|, |c1 - c2| + |c3 + c4|).
double chsh_value(const CorrelationVector& c);

/// True iff chsh_value(c) <= 2 + kInequalityTolerance.
bool polytope_member(const CorrelationVector& c);

/// (-cos theta1, -cos theta2, -cos theta3, F4(theta)). Throws DomainError
/// outside [0, pi]^3.
CorrelationVector correlations_from_angles(const AngleTriple& theta,
                                           const F4Candidate& candidate);

}  // namespace chshkit
