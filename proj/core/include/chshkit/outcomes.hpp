// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace chshkit {

/// A non-empty sequence of +1/-1 measurement outcomes.
class OutcomeSequence {
 public:
  /// Throws DomainError if `values` is empty or holds anything but +1/-1.
  explicit OutcomeSequence(std::vector<std::int8_t> values);
  OutcomeSequence(std::initializer_list<int> values);

  std::size_t size() const { return values_.size(); }
  std::int8_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int8_t> values() const { return values_; }

  /// Elementwise sign flip.
  OutcomeSequence negated() const;

  friend bool operator==(const OutcomeSequence&,
                         const OutcomeSequence&) = default;

 private:
  std::vector<std::int8_t> values_;
};

/// (1/n) sum u_i v_i. Throws ShapeError on length mismatch.
double empirical_correlation(const OutcomeSequence& u, const OutcomeSequence& v);

/// Joint law of one (+/-1, +/-1) outcome pair.
struct JointDistribution2 {
  double p_pp = 0.25;
  double p_pm = 0.25;
  double p_mp = 0.25;
  double p_mm = 0.25;

  /// Nonnegative, normalized and with uniform marginals, all within 1e-12.
  bool is_valid() const;
  /// Throws DomainError unless is_valid().
  void validate() const;
  double expected_product() const { return p_pp + p_mm - p_pm - p_mp; }
};

inline constexpr double kProbabilityTolerance = 1e-12;

/// Outcome statistics of a singlet pair measured at relative angle theta:
/// p(+,+) = p(-,-) = (1 - cos theta)/4, p(+,-) = p(-,+) = (1 + cos theta)/4.
JointDistribution2 singlet_joint(double theta);

}  // namespace chshkit
