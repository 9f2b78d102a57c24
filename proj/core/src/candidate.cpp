// SPDX-License-Identifier: Apache-2.0

#include "chshkit/candidate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chshkit/errors.hpp"

namespace chshkit {

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::locality:
      return "locality";
    case CandidateKind::product:
      return "product";
    case CandidateKind::product_diagonal:
      return "product-diagonal";
    case CandidateKind::grid:
      return "grid";
    case CandidateKind::function:
      return "function";
  }
  return "unknown";
}

double grid_node(int k, int resolution) {
  if (k == resolution - 1) {
    return kPi;
  }
  return kPi * static_cast<double>(k) / static_cast<double>(resolution - 1);
}

void GridPayload::validate() const {
  if (resolution < 2) {
    throw FormatError("grid candidate: resolution must be at least 2");
  }
  const auto r = static_cast<std::size_t>(resolution);
  if (values.size() != r * r * r) {
    throw FormatError("grid candidate: expected " + std::to_string(r * r * r) +
                      " values, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw FormatError("grid candidate: value " + std::to_string(i) +
                        " is outside [-1, 1]");
    }
  }
}

F4Candidate F4Candidate::locality() {
  return F4Candidate(CandidateKind::locality, "locality");
}

F4Candidate F4Candidate::product() {
  return F4Candidate(CandidateKind::product, "product");
}

F4Candidate F4Candidate::product_diagonal() {
  return F4Candidate(CandidateKind::product_diagonal, "product-diagonal");
}

F4Candidate F4Candidate::grid(GridPayload payload, std::string name) {
  payload.validate();
  F4Candidate c(CandidateKind::grid, std::move(name));
  c.grid_ = std::make_shared<const GridPayload>(std::move(payload));
  return c;
}

F4Candidate F4Candidate::function(std::string name, Function fn) {
  if (!fn) {
    throw DomainError("F4Candidate::function: empty callable");
  }
  F4Candidate c(CandidateKind::function, std::move(name));
  c.fn_ = std::move(fn);
  return c;
}

F4Candidate F4Candidate::builtin(std::string_view name) {
  if (name == "locality") {
    return locality();
  }
  if (name == "product") {
    return product();
  }
  if (name == "product-diagonal") {
    return product_diagonal();
  }
  throw DomainError("unknown builtin candidate '" + std::string(name) + "'");
}

namespace {

double product_value(const AngleTriple& t) {
  return -std::cos(t.theta1()) * std::cos(t.theta2()) * std::cos(t.theta3());
}

double trilinear(const GridPayload& g, const AngleTriple& t) {
  const int last_cell = g.resolution - 2;
  int cell[3];
  double frac[3];
  for (int axis = 0; axis < 3; ++axis) {
    double pos = t[axis] / g.spacing();
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) <= 1e-12 * std::max(1.0, nearest)) {
      pos = nearest;
    }
    const int i = std::clamp(static_cast<int>(std::floor(pos)), 0, last_cell);
    cell[axis] = i;
    frac[axis] = std::clamp(pos - i, 0.0, 1.0);
  }
  double acc = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int corner = 0; corner < 8; ++corner) {
    const int d1 = (corner >> 2) & 1;
    const int d2 = (corner >> 1) & 1;
    const int d3 = corner & 1;
    const double w = (d1 ? frac[0] : 1.0 - frac[0]) *
                     (d2 ? frac[1] : 1.0 - frac[1]) *
                     (d3 ? frac[2] : 1.0 - frac[2]);
    if (w != 0.0) {
      const double v = g.values[g.index(cell[0] + d1, cell[1] + d2, cell[2] + d3)];
      acc += w * v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  // A convex combination cannot leave the hull of its corners.
  return std::clamp(acc, lo, hi);
}

}  // namespace

double F4Candidate::eval_unchecked(const AngleTriple& t) const {
  switch (kind_) {
    case CandidateKind::locality:
      return -std::cos(t.theta2() + t.theta3() - t.theta1());
    case CandidateKind::product:
      return product_value(t);
    case CandidateKind::product_diagonal:
      return t.on_diagonal() ? -std::cos(t.theta1()) : product_value(t);
    case CandidateKind::grid:
      return trilinear(*grid_, t);
    case CandidateKind::function:
      return fn_(t);
  }
  return 0.0;
}

double F4Candidate::eval(const AngleTriple& theta) const {
  theta.require_q_plus("F4Candidate::eval");
  const double v = eval_unchecked(theta);
  if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
    throw DomainError("candidate '" + name_ + "' returned " +
                      std::to_string(v) + ", outside [-1, 1]");
  }
  return v;
}

}  // namespace chshkit
