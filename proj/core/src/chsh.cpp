// SPDX-License-Identifier: Apache-2.0

#include "chshkit/chsh.hpp"

#include <algorithm>
#include <cmath>

#include "chshkit/errors.hpp"

namespace chshkit {

BooleResult boole_check(const OutcomeSequence& u, const OutcomeSequence& x,
                        const OutcomeSequence& v, const OutcomeSequence& y) {
  const std::size_t n = u.size();
  if (x.size() != n || v.size() != n || y.size() != n) {
    throw ShapeError("boole_check: all four sequences must have equal length");
  }
  const double ux = empirical_correlation(u, x);
  const double vx = empirical_correlation(v, x);
  const double uy = empirical_correlation(u, y);
  const double vy = empirical_correlation(v, y);

  BooleResult r;
  r.lhs1 = std::abs(ux + vx) + std::abs(uy - vy);
  r.lhs2 = std::abs(ux - vx) + std::abs(uy + vy);
  r.holds = r.lhs1 <= 2.0 + kInequalityTolerance &&
            r.lhs2 <= 2.0 + kInequalityTolerance;
  return r;
}

void CorrelationVector::validate() const {
  for (double c : {c1, c2, c3, c4}) {
    if (!std::isfinite(c) || c < -1.0 || c > 1.0) {
      throw DomainError("CorrelationVector: component outside [-1, 1]");
    }
  }
}

double chsh_value(const CorrelationVector& c) {
  c.validate();
  return std::max(std::abs(c.c1 + c.c2) + std::abs(c.c3 - c.c4),
                  std::abs(c.c1 - c.c2) + std::abs(c.c3 + c.c4));
}

bool polytope_member(const CorrelationVector& c) {
  return chsh_value(c) <= 2.0 + kInequalityTolerance;
}

CorrelationVector correlations_from_angles(const AngleTriple& theta,
                                           const F4Candidate& candidate) {
  theta.require_q_plus("correlations_from_angles");
  return CorrelationVector{twisted_malus(theta.theta1()),
                           twisted_malus(theta.theta2()),
                           twisted_malus(theta.theta3()),
                           candidate.eval(theta)};
}

}  // namespace chshkit
