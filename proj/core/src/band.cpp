// SPDX-License-Identifier: Apache-2.0

#include "chshkit/band.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "chshkit/candidate.hpp"
#include "chshkit/errors.hpp"
#include "chshkit/parallel.hpp"

namespace chshkit {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("Interval: non-finite endpoint");
  }
  if (lo > hi) {
    throw DomainError("Interval: empty interval [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
}

Interval feasible_band(const AngleTriple& theta) {
  theta.require_q_plus("feasible_band");
  const double c1 = twisted_malus(theta.theta1());
  const double c2 = twisted_malus(theta.theta2());
  const double c3 = twisted_malus(theta.theta3());
  const double r1 = 2.0 - std::abs(c1 + c2);
  const double r2 = 2.0 - std::abs(c1 - c2);

  double lo = std::max({c3 - r1, -c3 - r2, -1.0});
  double hi = std::min({c3 + r1, -c3 + r2, 1.0});
  // Singleton bands (axes, corners) can come out crossed by a few ulps.
  if (lo > hi && lo - hi <= 1e-12) {
    const double mid = 0.5 * (lo + hi);
    lo = mid;
    hi = mid;
  }
  return Interval(lo, hi);
}

std::vector<BandRow> band_map(int resolution) {
  if (resolution < 2) {
    throw DomainError("band_map: resolution must be at least 2");
  }
  const auto r = static_cast<std::size_t>(resolution);
  std::vector<std::optional<BandRow>> slots(r * r * r);
  parallel_for(r, [&](std::size_t i1) {
    for (std::size_t i2 = 0; i2 < r; ++i2) {
      for (std::size_t i3 = 0; i3 < r; ++i3) {
        const AngleTriple theta(grid_node(static_cast<int>(i1), resolution),
                                grid_node(static_cast<int>(i2), resolution),
                                grid_node(static_cast<int>(i3), resolution));
        slots[(i1 * r + i2) * r + i3].emplace(BandRow{theta, feasible_band(theta)});
      }
    }
  });
  std::vector<BandRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) {
    rows.push_back(std::move(*s));
  }
  return rows;
}

}  // namespace chshkit
