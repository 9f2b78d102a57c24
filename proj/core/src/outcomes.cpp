// SPDX-License-Identifier: Apache-2.0

#include "chshkit/outcomes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chshkit/errors.hpp"

namespace chshkit {

OutcomeSequence::OutcomeSequence(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw DomainError("OutcomeSequence: empty sequence");
  }
  const auto bad = std::find_if(values_.begin(), values_.end(),
                                [](std::int8_t v) { return v != 1 && v != -1; });
  if (bad != values_.end()) {
    throw DomainError("OutcomeSequence: element " +
                      std::to_string(bad - values_.begin()) +
                      " is not +1 or -1");
  }
}

OutcomeSequence::OutcomeSequence(std::initializer_list<int> values)
    : OutcomeSequence([&] {
        std::vector<std::int8_t> v;
        v.reserve(values.size());
        for (int x : values) {
          if (x != 1 && x != -1) {
            throw DomainError("OutcomeSequence: element is not +1 or -1");
          }
          v.push_back(static_cast<std::int8_t>(x));
        }
        return v;
      }()) {}

OutcomeSequence OutcomeSequence::negated() const {
  std::vector<std::int8_t> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](std::int8_t v) { return static_cast<std::int8_t>(-v); });
  return OutcomeSequence(std::move(out));
}

double empirical_correlation(const OutcomeSequence& u,
                             const OutcomeSequence& v) {
  if (u.size() != v.size()) {
    throw ShapeError("empirical_correlation: lengths " +
                     std::to_string(u.size()) + " and " +
                     std::to_string(v.size()) + " differ");
  }
  // Integer accumulation keeps the result exact up to the final division.
  std::int64_t sum = 0;
  const auto a = u.values();
  const auto b = v.values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * b[i];
  }
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

bool JointDistribution2::is_valid() const {
  const double tol = kProbabilityTolerance;
  for (double p : {p_pp, p_pm, p_mp, p_mm}) {
    if (!std::isfinite(p) || p < -tol) {
      return false;
    }
  }
  return std::abs(p_pp + p_pm + p_mp + p_mm - 1.0) <= tol &&
         std::abs(p_pp + p_pm - 0.5) <= tol &&
         std::abs(p_pp + p_mp - 0.5) <= tol;
}

void JointDistribution2::validate() const {
  if (!is_valid()) {
    throw DomainError(
        "JointDistribution2: probabilities must be nonnegative, sum to 1 and "
        "have uniform marginals");
  }
}

JointDistribution2 singlet_joint(double theta) {
  if (!std::isfinite(theta)) {
    throw DomainError("singlet_joint: non-finite angle");
  }
  const double c = std::cos(theta);
  const double same = (1.0 - c) / 4.0;
  const double opposite = (1.0 + c) / 4.0;
  return JointDistribution2{same, opposite, opposite, same};
}

}  // namespace chshkit
