// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chshkit/angles.hpp"

namespace chshkit {

enum class CandidateKind {
  locality,          // -cos(theta2 + theta3 - theta1)
  product,           // -cos(theta1) cos(theta2) cos(theta3)
  product_diagonal,  // -cos(theta) on the diagonal, product elsewhere
  grid,              // trilinear interpolation of node values
  function,          // user-supplied callable
};

std::string_view to_string(CandidateKind kind);

/// Node values on the uniform resolution^3 grid over [0, pi]^3, theta1-major
/// (index = (i1 * resolution + i2) * resolution + i3).
struct GridPayload {
  int resolution = 0;
  std::vector<double> values;

  double spacing() const { return kPi / (resolution - 1); }
  std::size_t index(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * resolution + i2) * resolution + i3;
  }
  /// Throws FormatError unless resolution >= 2, the value count is
  /// resolution^3 and every value is finite and in [-1, 1].
  void validate() const;
};

/// Coordinate of grid node k on an axis with `resolution` nodes; the last
/// node is exactly pi.
double grid_node(int k, int resolution);

/// A candidate for the unknown correlation <a_bo, b_ob> as a function of the
/// reduced angles. Cheap to copy; grid payloads are shared.
class F4Candidate {
 public:
  using Function = std::function<double(const AngleTriple&)>;

  static F4Candidate locality();
  static F4Candidate product();
  static F4Candidate product_diagonal();
  /// Throws FormatError for a malformed payload.
  static F4Candidate grid(GridPayload payload, std::string name = "grid");
  static F4Candidate function(std::string name, Function fn);

  /// Builtin by name: "locality", "product" or "product-diagonal".
  /// Throws DomainError for anything else.
  static F4Candidate builtin(std::string_view name);

  CandidateKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Present only for grid candidates.
  const GridPayload* grid_payload() const { return grid_.get(); }

  /// Evaluates at a triple in [0, pi]^3. Throws DomainError outside that cube
  /// or if the candidate produces a value outside [-1, 1].
  double eval(const AngleTriple& theta) const;
  double eval(double t1, double t2, double t3) const {
    return eval(AngleTriple(t1, t2, t3));
  }

 private:
  F4Candidate(CandidateKind kind, std::string name)
      : kind_(kind), name_(std::move(name)) {}

  double eval_unchecked(const AngleTriple& theta) const;

  CandidateKind kind_;
  std::string name_;
  std::shared_ptr<const GridPayload> grid_;
  Function fn_;
};

}  // namespace chshkit
