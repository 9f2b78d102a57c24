// SPDX-License-Identifier: Apache-2.0

#include "chshkit/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chshkit/band.hpp"
#include "chshkit/chsh.hpp"
#include "chshkit/errors.hpp"
#include "chshkit/parallel.hpp"

namespace chshkit {

namespace {

// Additive recurrences x_n = frac(s + n alpha) with alpha built from the
// generalized golden ratios (x^3 = x + 1 in 2-D, x^4 = x + 1 in 3-D).
constexpr double kPhi2 = 1.3247179572447460;
constexpr double kPhi3 = 1.2207440846057596;

double frac(double x) { return x - std::floor(x); }

template <std::size_t D>
std::array<double, D> recurrence_point(const std::array<double, D>& offset,
                                       std::uint64_t n) {
  const double phi = D == 2 ? kPhi2 : kPhi3;
  std::array<double, D> out{};
  double alpha = 1.0;
  for (std::size_t d = 0; d < D; ++d) {
    alpha /= phi;
    // frac(n alpha) computed in long double keeps precision for large n.
    const long double step =
        static_cast<long double>(n) * static_cast<long double>(alpha);
    out[d] = frac(offset[d] + static_cast<double>(step - std::floor(step)));
  }
  return out;
}

template <std::size_t D>
std::array<double, D> seeded_offset(Seed seed) {
  Stream stream(splitmix64(seed.value));
  std::array<double, D> offset{};
  for (auto& o : offset) {
    o = stream.uniform();
  }
  return offset;
}

AngleTriple scaled(const Vec3& v, double t) {
  return AngleTriple(t * v[0], t * v[1], t * v[2]);
}

Vec3 axis_vector(int axis) {
  Vec3 e{0.0, 0.0, 0.0};
  e[static_cast<std::size_t>(axis)] = 1.0;
  return e;
}

struct Monomial {
  std::array<int, 3> power;
  int degree;
};

/// Monomials of total degree <= max_degree, ordered by degree; within degree
/// two the order is 11, 12, 13, 22, 23, 33.
std::vector<Monomial> monomials(int max_degree) {
  std::vector<Monomial> out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (int a = deg; a >= 0; --a) {
      for (int b = deg - a; b >= 0; --b) {
        out.push_back({{a, b, deg - a - b}, deg});
      }
    }
  }
  return out;
}

double monomial_value(const Monomial& m, const Vec3& x) {
  double v = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int p = 0; p < m.power[static_cast<std::size_t>(i)]; ++p) {
      v *= x[static_cast<std::size_t>(i)];
    }
  }
  return v;
}

int nuisance_degree(int samples) {
  if (samples >= 70) {
    return 4;
  }
  if (samples >= 40) {
    return 3;
  }
  return 2;
}

}  // namespace

Vec3 gradient_at_origin(const F4Candidate& candidate, double h) {
  if (!(h > 0.0 && h <= 0.1)) {
    throw DomainError("gradient_at_origin: step must lie in (0, 0.1]");
  }
  const double f0 = candidate.eval(0.0, 0.0, 0.0);
  Vec3 grad{};
  for (int axis = 0; axis < 3; ++axis) {
    const Vec3 e = axis_vector(axis);
    auto quotient = [&](double s) {
      return (candidate.eval(scaled(e, s)) - f0) / s;
    };
    grad[static_cast<std::size_t>(axis)] = 2.0 * quotient(0.5 * h) - quotient(h);
  }
  return grad;
}

double axis_derivative_check(const F4Candidate& candidate, double t,
                             Axis axis) {
  constexpr double h = 1e-4;
  if (!(t - h > 0.0 && t + h < kPi)) {
    throw DomainError(
        "axis_derivative_check: t must leave room for the stencil inside (0, pi)");
  }
  const Vec3 e = axis_vector(static_cast<int>(axis));
  const double derivative =
      (candidate.eval(scaled(e, t + h)) - candidate.eval(scaled(e, t - h))) /
      (2.0 * h);
  return std::abs(derivative - std::sin(t));
}

double second_quotient(const F4Candidate& candidate, const Vec3& direction,
                       double t) {
  if (!(t > 0.0 && t <= 0.5)) {
    throw DomainError("second_quotient: t must lie in (0, 0.5]");
  }
  double norm2 = 0.0;
  for (double c : direction) {
    if (!(c >= 0.0)) {
      throw DomainError("second_quotient: direction must have nonnegative components");
    }
    norm2 += c * c;
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw DomainError("second_quotient: direction must be a unit vector");
  }
  return (candidate.eval(scaled(direction, t)) + 1.0) / (t * t);
}

double QuadraticFit::quad(int i, int j) const {
  if (i > j) {
    std::swap(i, j);
  }
  // Row offsets of the packed upper triangle: 0 -> 0, 1 -> 3, 2 -> 5.
  static constexpr int kRowStart[3] = {0, 3, 5};
  return c_quad_upper[static_cast<std::size_t>(kRowStart[i] + (j - i))];
}

double QuadraticFit::eval(const Vec3& t) const {
  double v = c0;
  for (int i = 0; i < 3; ++i) {
    v += c_lin[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(i)];
    for (int j = i; j < 3; ++j) {
      v += quad(i, j) * t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
    }
  }
  return v;
}

QuadraticFit quadratic_fit(const F4Candidate& candidate, double radius,
                           int samples, Seed seed) {
  if (!(radius > 0.0 && radius <= 0.3)) {
    throw DomainError("quadratic_fit: radius must lie in (0, 0.3]");
  }
  if (samples < 10) {
    throw DomainError("quadratic_fit: at least 10 samples are needed for 10 coefficients");
  }

  // Quasi-random points of the cube [0, r]^3 that fall inside the ball.
  const auto offset = seeded_offset<3>(seed);
  std::vector<Vec3> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (std::uint64_t n = 1; points.size() < static_cast<std::size_t>(samples); ++n) {
    const auto u = recurrence_point<3>(offset, n);
    const Vec3 p{radius * u[0], radius * u[1], radius * u[2]};
    if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] <= radius * radius) {
      points.push_back(p);
    }
  }

  std::vector<double> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    values[i] = candidate.eval(AngleTriple(points[i][0], points[i][1], points[i][2]));
  });

  // Regress in scaled coordinates theta / radius for conditioning.
  const auto basis = monomials(nuisance_degree(samples));
  const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Vec3& p = points[static_cast<std::size_t>(r)];
    const Vec3 x{p[0] / radius, p[1] / radius, p[2] / radius};
    for (Eigen::Index c = 0; c < cols; ++c) {
      design(r, c) = monomial_value(basis[static_cast<std::size_t>(c)], x);
    }
    rhs(r) = values[static_cast<std::size_t>(r)];
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);

  QuadraticFit fit;
  fit.c0 = coef(0);
  for (int i = 0; i < 3; ++i) {
    fit.c_lin[static_cast<std::size_t>(i)] = coef(1 + i) / radius;
  }
  for (int k = 0; k < 6; ++k) {
    fit.c_quad_upper[static_cast<std::size_t>(k)] = coef(4 + k) / (radius * radius);
  }

  double sq = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double e = values[i] - fit.eval(points[i]);
    sq += e * e;
  }
  fit.residual = std::sqrt(sq / static_cast<double>(points.size()));
  if (!std::isfinite(fit.residual)) {
    fit.residual = std::numeric_limits<double>::infinity();
  }
  return fit;
}

double diagonal_coefficient(const F4Candidate& candidate, double radius,
                            int points) {
  if (!(radius > 0.0 && radius <= kPi) || points < 3) {
    throw DomainError("diagonal_coefficient: need radius in (0, pi] and >= 3 points");
  }
  // sigma t^2 + tau t^4 + upsilon t^6 in the scaled variable s = t / radius.
  Eigen::MatrixXd a(points, 3);
  Eigen::VectorXd y(points);
  for (int k = 0; k < points; ++k) {
    const double s = static_cast<double>(k + 1) / points;
    const double t = radius * s;
    const double s2 = s * s;
    a(k, 0) = s2;
    a(k, 1) = s2 * s2;
    a(k, 2) = s2 * s2 * s2;
    y(k) = candidate.eval(t, t, t) + 1.0;
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(y);
  return coef(0) / (radius * radius);
}

std::vector<Vec3> octant_directions(int count, Seed seed) {
  const auto offset = seeded_offset<2>(seed);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 1; n <= count; ++n) {
    const auto u = recurrence_point<2>(offset, static_cast<std::uint64_t>(n));
    // z uniform in [0, 1] and azimuth uniform in [0, pi/2] is uniform on the
    // octant of the sphere.
    const double z = u[0];
    const double phi = 0.5 * kPi * u[1];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec3 v{rho * std::cos(phi), rho * std::sin(phi), z};
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& c : v) {
      c = std::max(0.0, c / norm);
    }
    out.push_back(v);
  }
  return out;
}

QuotientRange quotient_range(const F4Candidate& candidate, double t,
                             int n_directions, Seed seed) {
  auto directions = octant_directions(n_directions, seed);
  const double d = 1.0 / std::sqrt(3.0);
  directions.push_back({d, d, d});

  std::vector<double> q(directions.size());
  parallel_for(directions.size(), [&](std::size_t i) {
    q[i] = second_quotient(candidate, directions[i], t);
  });
  const auto [lo, hi] = std::minmax_element(q.begin(), q.end());
  return {*lo, *hi};
}

double jump_measure(const F4Candidate& candidate, double t, int n_directions,
                    Seed seed) {
  if (!(t > 0.0 && t <= 0.1)) {
    throw DomainError("jump_measure: t must lie in (0, 0.1]");
  }
  if (n_directions < 8) {
    throw DomainError("jump_measure: need at least 8 directions");
  }
  const QuotientRange r = quotient_range(candidate, t, n_directions, seed);
  return r.max - r.min;
}

std::vector<Violation> inequality_scan(const F4Candidate& candidate,
                                       int resolution) {
  if (resolution < 2) {
    throw DomainError("inequality_scan: resolution must be at least 2");
  }
  const auto r = static_cast<std::size_t>(resolution);
  std::vector<std::vector<Violation>> per_slab(r);
  parallel_for(r, [&](std::size_t i1) {
    auto& out = per_slab[i1];
    for (std::size_t i2 = 0; i2 < r; ++i2) {
      for (std::size_t i3 = 0; i3 < r; ++i3) {
        const AngleTriple theta(grid_node(static_cast<int>(i1), resolution),
                                grid_node(static_cast<int>(i2), resolution),
                                grid_node(static_cast<int>(i3), resolution));
        const double value = candidate.eval(theta);
        const Interval band = feasible_band(theta);
        if (!band.contains(value, kScanTolerance)) {
          out.push_back({ViolationKind::band, theta, value, band.lo(), band.hi()});
        }
        if (i1 == i2 && i2 == i3) {
          const double expected = -std::cos(theta.theta1());
          if (std::abs(value - expected) > kScanTolerance) {
            out.push_back({ViolationKind::diagonal, theta, value, expected, expected});
          }
        }
      }
    }
  });
  std::vector<Violation> all;
  for (auto& slab : per_slab) {
    all.insert(all.end(), slab.begin(), slab.end());
  }
  return all;
}

CrossProbe cross_term_probe(const F4Candidate& candidate, double x,
                            const std::vector<double>& ks) {
  if (ks.empty() || !(x > 0.0)) {
    throw DomainError("cross_term_probe: need x > 0 and at least one k");
  }
  static constexpr std::array<std::pair<int, int>, 3> kPairs{{{1, 2}, {0, 2}, {0, 1}}};
  CrossProbe probe;
  probe.max_slack = -std::numeric_limits<double>::infinity();
  double k_max = 0.0;
  for (double k : ks) {
    if (!(k > 0.0) || !(k * x <= kPi)) {
      throw DomainError("cross_term_probe: k x must lie in (0, pi]");
    }
    k_max = std::max(k_max, k);
    for (const auto& [i, j] : kPairs) {
      Vec3 p{0.0, 0.0, 0.0};
      p[static_cast<std::size_t>(i)] = x;
      p[static_cast<std::size_t>(j)] = k * x;
      const AngleTriple theta(p[0], p[1], p[2]);
      const double value = chsh_value(correlations_from_angles(theta, candidate));
      probe.max_slack = std::max(probe.max_slack, (value - 2.0) / (x * x));
    }
  }
  probe.admissible_lo = -1.0 / k_max;
  probe.admissible_hi = 0.0;
  return probe;
}

AnalysisReport contradiction_report(const F4Candidate& candidate,
                                    const AnalysisTolerances& tol) {
  AnalysisReport rep;
  rep.candidate = candidate.name();
  rep.value_at_origin = candidate.eval(0.0, 0.0, 0.0);
  rep.gradient_at_origin = gradient_at_origin(candidate, tol.gradient_step);
  for (int axis = 0; axis < 3; ++axis) {
    rep.axis_residuals[static_cast<std::size_t>(axis)] =
        axis_derivative_check(candidate, tol.axis_point, static_cast<Axis>(axis));
  }

  rep.fit = quadratic_fit(candidate, tol.fit_radius, tol.fit_samples, tol.seed);
  rep.axis_forced_sum = rep.fit.quad(0, 0) + rep.fit.quad(1, 1) + rep.fit.quad(2, 2);
  rep.axis_sum_consistent =
      std::abs(rep.axis_forced_sum - 1.5) <= tol.coefficient_tolerance;
  rep.cross_term_max = std::max(
      {std::abs(rep.fit.quad(0, 1)), std::abs(rep.fit.quad(0, 2)),
       std::abs(rep.fit.quad(1, 2))});

  rep.cross_probe = cross_term_probe(candidate, tol.probe_x, tol.probe_k);
  bool admissible = true;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const double c = rep.fit.quad(i, j);
    admissible = admissible &&
                 c >= rep.cross_probe.admissible_lo - tol.coefficient_tolerance &&
                 c <= rep.cross_probe.admissible_hi + tol.coefficient_tolerance;
  }
  rep.cross_terms_admissible = admissible;

  rep.diagonal_sum =
      diagonal_coefficient(candidate, tol.fit_radius, tol.diagonal_points);
  rep.diagonal_violated = std::abs(rep.diagonal_sum - 0.5) > tol.coefficient_tolerance;

  rep.contradiction =
      rep.fit.residual <= tol.residual_threshold &&
      std::abs(rep.diagonal_sum - rep.axis_forced_sum) > tol.coefficient_tolerance;

  const QuotientRange range =
      quotient_range(candidate, tol.jump_step, tol.jump_directions, tol.seed);
  rep.jump_spread = range.max - range.min;
  rep.jump_detected = rep.jump_spread > tol.jump_tolerance;
  rep.second_quotient_bound = std::max(std::abs(range.min), std::abs(range.max));

  if (const GridPayload* g = candidate.grid_payload();
      g != nullptr && tol.fit_radius < g->spacing()) {
    rep.disclaimer =
        "fit radius " + std::to_string(tol.fit_radius) +
        " is below the grid spacing " + std::to_string(g->spacing()) +
        "; the fit sees only trilinear interpolation inside one cell";
  }
  return rep;
}

}  // namespace chshkit
