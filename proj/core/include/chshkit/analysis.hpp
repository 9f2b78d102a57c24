// SPDX-License-Identifier: Apache-2.0

// Numerical differentiability analysis of F4 candidates near the origin of
// [0, pi]^3.
//
// The constraints being probed:
//  * the CHSH band pins F4(0) = -1 and F4(t e_i) = -cos t, so the gradient
//    vanishes at the origin and the axis derivatives equal sin t;
//  * on the diagonal F4(t, t, t) = -cos t;
//  * a candidate that were a quadratic polynomial near the origin would need
//    c11 = c22 = c33 = 1/2 (axes) and c_ij = 0 for i < j (cross probes), so its
//    diagonal coefficient would be 3/2 while the diagonal demands 1/2.
// A band-respecting candidate therefore has to change its second-order
// behaviour with direction; jump_measure quantifies that.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chshkit/angles.hpp"
#include "chshkit/candidate.hpp"
#include "chshkit/random.hpp"

namespace chshkit {

enum class Axis : int { theta1 = 0, theta2 = 1, theta3 = 2 };

using Vec3 = std::array<double, 3>;

/// One-sided difference quotients D(s) = (F(s e_i) - F(0)) / s into the cube,
/// combined as 2 D(h/2) - D(h) to cancel the O(h) term. Throws DomainError
/// unless 0 < h <= 0.1.
Vec3 gradient_at_origin(const F4Candidate& candidate, double h = 1e-4);

/// |central difference of F along axis i at t e_i - sin t| with step 1e-4.
/// Throws DomainError unless the stencil fits strictly inside (0, pi).
double axis_derivative_check(const F4Candidate& candidate, double t, Axis axis);

/// (F(t v) + 1) / t^2. Throws DomainError if v has a negative component, is
/// not unit length (1e-9), or t is outside (0, 0.5].
double second_quotient(const F4Candidate& candidate, const Vec3& direction,
                       double t);

/// c0 + sum c_i theta_i + sum_{i<=j} c_ij theta_i theta_j.
struct QuadraticFit {
  double c0 = 0.0;
  Vec3 c_lin{};
  /// Upper triangle in the order c11, c12, c13, c22, c23, c33.
  std::array<double, 6> c_quad_upper{};
  /// Root-mean-square error of the quadratic model on the fit points.
  double residual = 0.0;

  /// Symmetric access, 0-based indices.
  double quad(int i, int j) const;
  double eval(const Vec3& theta) const;
};

/// Least-squares Taylor fit on `samples` quasi-random points of
/// [0, pi]^3 intersected with the ball of `radius` about the origin.
///
/// Higher-order monomials (degree 3, and degree 4 when samples >= 70) enter
/// the regression as nuisance terms so that quartic curvature does not leak
/// into the quadratic coefficients; only the quadratic part is returned and
/// `residual` measures how far the candidate is from that quadratic. Throws
/// DomainError unless 0 < radius <= 0.3 and samples >= 10.
QuadraticFit quadratic_fit(const F4Candidate& candidate, double radius,
                           int samples, Seed seed);

/// Least-squares sigma in F(t, t, t) + 1 = sigma t^2 + tau t^4 + upsilon t^6
/// over `points` equally spaced t in (0, radius]. Throws DomainError for
/// fewer than 3 points.
double diagonal_coefficient(const F4Candidate& candidate, double radius,
                            int points = 16);

/// Quasi-random unit directions with nonnegative components (uniform on the
/// sphere octant), deterministic in the seed.
std::vector<Vec3> octant_directions(int count, Seed seed);

struct QuotientRange {
  double min = 0.0;
  double max = 0.0;
};

/// second_quotient over octant_directions(n_directions, seed) plus the
/// diagonal direction (1, 1, 1)/sqrt(3).
QuotientRange quotient_range(const F4Candidate& candidate, double t,
                             int n_directions, Seed seed);

/// max - min of quotient_range. Throws DomainError unless 0 < t <= 0.1 and
/// n_directions >= 8.
double jump_measure(const F4Candidate& candidate, double t, int n_directions,
                    Seed seed);

enum class ViolationKind { band, diagonal };

struct Violation {
  ViolationKind kind;
  AngleTriple theta;
  double value;
  /// Allowed range: the CHSH band, or [-cos t, -cos t] on the diagonal.
  double lo;
  double hi;
};

inline constexpr double kScanTolerance = 1e-9;

/// Every node of the uniform resolution^3 grid where the candidate leaves the
/// CHSH band, followed per node by diagonal nodes where it differs from
/// -cos t, all by more than kScanTolerance. Theta1-major order. Throws
/// DomainError for resolution < 2.
std::vector<Violation> inequality_scan(const F4Candidate& candidate,
                                       int resolution);

/// Probe of the cross coefficients c_ij along theta_i = x, theta_j = k x.
struct CrossProbe {
  /// Largest (chsh_value - 2) / x^2 over all pairs and k. Only meaningful
  /// while k x is small: at k x ~ 0.5 the quartic term of cos(k x) alone
  /// contributes about k^4 x^2 / 24.
  double max_slack = 0.0;
  /// For a quadratic candidate with c_ii = 1/2 the inequalities at these
  /// points hold iff c_ij lies in [-1/k, 0]; this is that bound for the
  /// largest k.
  double admissible_lo = 0.0;
  double admissible_hi = 0.0;
};

CrossProbe cross_term_probe(const F4Candidate& candidate, double x,
                            const std::vector<double>& ks);

struct AnalysisTolerances {
  double gradient_step = 1e-4;
  double axis_point = kPi / 3.0;
  double fit_radius = 0.1;
  int fit_samples = 200;
  Seed seed{0};
  /// Agreement required between coefficient sums (3/2, 1/2, cross terms).
  double coefficient_tolerance = 0.05;
  /// Fit residual at or below which the candidate counts as quadratic near
  /// the origin.
  double residual_threshold = 1e-9;
  double jump_step = 1e-2;
  int jump_directions = 64;
  double jump_tolerance = 0.05;
  double probe_x = 1e-2;
  std::vector<double> probe_k{2.0, 5.0, 10.0, 50.0};
  int diagonal_points = 16;
};

struct AnalysisReport {
  std::string candidate;
  double value_at_origin = 0.0;
  Vec3 gradient_at_origin{};
  /// axis_derivative_check at tolerances.axis_point, per axis.
  Vec3 axis_residuals{};
  /// Largest |second_quotient| seen by the jump probe.
  double second_quotient_bound = 0.0;
  QuadraticFit fit;
  /// sigma from diagonal_coefficient; 1/2 when F(t,t,t) = -cos t.
  double diagonal_sum = 0.0;
  /// c11 + c22 + c33 of the fit; the band forces 3/2.
  double axis_forced_sum = 0.0;
  /// max |c_ij| (i < j) of the fit; the cross probes force 0.
  double cross_term_max = 0.0;
  CrossProbe cross_probe;
  bool axis_sum_consistent = false;
  /// Every fitted c_ij (i < j) lies in the probe's admissible interval,
  /// widened by coefficient_tolerance.
  bool cross_terms_admissible = false;
  bool diagonal_violated = false;
  /// The fit certifies a quadratic (residual <= threshold) whose axis sum
  /// disagrees with the diagonal sum.
  bool contradiction = false;
  double jump_spread = 0.0;
  bool jump_detected = false;
  /// Set for grid candidates whose fit radius is below the grid spacing.
  std::optional<std::string> disclaimer;
};

AnalysisReport contradiction_report(const F4Candidate& candidate,
                                    const AnalysisTolerances& tol = {});

}  // namespace chshkit
