// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "chshkit/angles.hpp"

namespace chshkit {

/// Closed interval [lo, hi] with lo <= hi.
class Interval {
 public:
  /// Throws DomainError if lo > hi or either end is not finite.
  Interval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return 0.5 * (lo_ + hi_); }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo_ - tol && x <= hi_ + tol;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Values of F4(theta) allowed by both CHSH inequalities once the other three
/// correlations are the cosines -cos(theta_i). With c_i = -cos(theta_i),
/// r1 = 2 - |c1 + c2| and r2 = 2 - |c1 - c2| the band is
///   [max(c3 - r1, -c3 - r2, -1), min(c3 + r1, -c3 + r2, 1)].
/// Throws DomainError outside [0, pi]^3.
Interval feasible_band(const AngleTriple& theta);

struct BandRow {
  AngleTriple theta;
  Interval band;
};

/// feasible_band on the uniform resolution^3 grid over [0, pi]^3, rows in
/// theta1-major order. Throws DomainError for resolution < 2.
std::vector<BandRow> band_map(int resolution);

}  // namespace chshkit
