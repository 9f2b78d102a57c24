// SPDX-License-Identifier: Apache-2.0

#include "chshkit/lp_band.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "chshkit/errors.hpp"

namespace chshkit {

namespace {

constexpr int kRows = 4;
constexpr int kCols = 16;
constexpr double kNonnegTolerance = 1e-10;

using Matrix4 = Eigen::Matrix<double, kRows, kRows>;
using Vector4 = Eigen::Matrix<double, kRows, 1>;

struct Basis {
  std::array<int, kRows> columns;
  Matrix4 inverse;
};

double coefficient(int row, int col) {
  const auto p = static_cast<std::size_t>(col);
  switch (row) {
    case 0:
      return 1.0;
    case 1:
      return JointDistribution4::sign(p, Slot::a_oo) *
             JointDistribution4::sign(p, Slot::b_oo);
    case 2:
      return JointDistribution4::sign(p, Slot::a_bo) *
             JointDistribution4::sign(p, Slot::b_oo);
    default:
      return JointDistribution4::sign(p, Slot::a_oo) *
             JointDistribution4::sign(p, Slot::b_ob);
  }
}

double objective(int col) {
  const auto p = static_cast<std::size_t>(col);
  return JointDistribution4::sign(p, Slot::a_bo) *
         JointDistribution4::sign(p, Slot::b_ob);
}

/// Every nonsingular 4-column basis of the constraint matrix, with its
/// inverse. The matrix does not depend on the right-hand side, so this is
/// computed once.
const std::vector<Basis>& bases() {
  static const std::vector<Basis> all = [] {
    std::vector<Basis> out;
    std::array<int, kRows> cols{};
    for (cols[0] = 0; cols[0] < kCols; ++cols[0]) {
      for (cols[1] = cols[0] + 1; cols[1] < kCols; ++cols[1]) {
        for (cols[2] = cols[1] + 1; cols[2] < kCols; ++cols[2]) {
          for (cols[3] = cols[2] + 1; cols[3] < kCols; ++cols[3]) {
            Matrix4 b;
            for (int r = 0; r < kRows; ++r) {
              for (int k = 0; k < kRows; ++k) {
                b(r, k) = coefficient(r, cols[k]);
              }
            }
            Eigen::FullPivLU<Matrix4> lu(b);
            lu.setThreshold(kPivotTolerance);
            if (lu.rank() == kRows) {
              out.push_back(Basis{cols, lu.inverse()});
            }
          }
        }
      }
    }
    return out;
  }();
  return all;
}

void require_correlation(double c, const char* name) {
  if (!std::isfinite(c) || c < -1.0 || c > 1.0) {
    throw DomainError(std::string("lp_band: ") + name + " must lie in [-1, 1]");
  }
}

JointDistribution4 to_distribution(const Basis& basis, const Vector4& x) {
  JointDistribution4 d;
  double total = 0.0;
  for (int k = 0; k < kRows; ++k) {
    const double v = std::max(0.0, x(k));
    d.p[static_cast<std::size_t>(basis.columns[k])] = v;
    total += v;
  }
  for (double& v : d.p) {
    v /= total;
  }
  return d;
}

}  // namespace

std::optional<LpResult> lp_band(double c1, double c2, double c3) {
  require_correlation(c1, "c1");
  require_correlation(c2, "c2");
  require_correlation(c3, "c3");
  const Vector4 rhs(1.0, c1, c2, c3);

  const Basis* best_min = nullptr;
  const Basis* best_max = nullptr;
  Vector4 x_min;
  Vector4 x_max;
  double lo = 0.0;
  double hi = 0.0;

  for (const Basis& basis : bases()) {
    const Vector4 x = basis.inverse * rhs;
    if (x.minCoeff() < -kNonnegTolerance) {
      continue;
    }
    double value = 0.0;
    for (int k = 0; k < kRows; ++k) {
      value += objective(basis.columns[k]) * x(k);
    }
    if (best_min == nullptr || value < lo) {
      best_min = &basis;
      x_min = x;
      lo = value;
    }
    if (best_max == nullptr || value > hi) {
      best_max = &basis;
      x_max = x;
      hi = value;
    }
  }
  if (best_min == nullptr) {
    return std::nullopt;
  }
  return LpResult{lo, hi, to_distribution(*best_min, x_min),
                  to_distribution(*best_max, x_max)};
}

JointDistribution4 feasible_distribution(double c1, double c2, double c3,
                                         double f) {
  const auto lp = lp_band(c1, c2, c3);
  if (!lp) {
    throw InfeasibleError("feasible_distribution: no distribution has moments (" +
                          std::to_string(c1) + ", " + std::to_string(c2) + ", " +
                          std::to_string(c3) + ")");
  }
  constexpr double tol = 1e-9;
  if (!std::isfinite(f) || f < lp->min_value - tol || f > lp->max_value + tol) {
    throw InfeasibleError("feasible_distribution: f = " + std::to_string(f) +
                          " lies outside [" + std::to_string(lp->min_value) +
                          ", " + std::to_string(lp->max_value) + "]");
  }
  const double span = lp->max_value - lp->min_value;
  const double weight_min =
      span > 0.0 ? std::clamp((lp->max_value - f) / span, 0.0, 1.0) : 1.0;

  JointDistribution4 mix;
  for (std::size_t i = 0; i < mix.p.size(); ++i) {
    mix.p[i] = weight_min * lp->witness_min.p[i] +
               (1.0 - weight_min) * lp->witness_max.p[i];
  }
  JointDistribution4 out;
  for (std::size_t i = 0; i < out.p.size(); ++i) {
    out.p[i] = 0.5 * (mix.p[i] + mix.p[15 - i]);
  }
  return out;
}

}  // namespace chshkit
