// SPDX-License-Identifier: Apache-2.0

#include "chshkit/angles.hpp"

#include <cmath>
#include <string>

#include "chshkit/errors.hpp"

namespace chshkit {

double wrap_angle(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("wrap_angle: non-finite angle");
  }
  if (x >= -kPi && x < kPi) {
    return x;
  }
  double r = std::fmod(x + kPi, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  double out = r - kPi;
  // x + pi may round; keep the result inside the half-open range.
  if (out >= kPi) {
    out -= kTwoPi;
  }
  if (out < -kPi) {
    out = -kPi;
  }
  return out;
}

double twisted_malus(double theta) {
  if (!std::isfinite(theta)) {
    throw DomainError("twisted_malus: non-finite angle");
  }
  return -std::cos(theta);
}

AngleQuadruplet::AngleQuadruplet(double theta_a, double theta_a_prime,
                                 double theta_b, double theta_b_prime)
    : theta_a_(wrap_angle(theta_a)),
      theta_a_prime_(wrap_angle(theta_a_prime)),
      theta_b_(wrap_angle(theta_b)),
      theta_b_prime_(wrap_angle(theta_b_prime)) {}

namespace {

bool in_closed_half_circle(double t) { return t >= 0.0 && t <= kPi; }

}  // namespace

AngleTriple::AngleTriple(double theta1, double theta2, double theta3)
    : t1_(theta1), t2_(theta2), t3_(theta3) {
  if (!std::isfinite(t1_) || !std::isfinite(t2_) || !std::isfinite(t3_)) {
    throw DomainError("AngleTriple: non-finite coordinate");
  }
  in_q_plus_ = in_closed_half_circle(t1_) && in_closed_half_circle(t2_) &&
               in_closed_half_circle(t3_);
}

void AngleTriple::require_q_plus(const char* what) const {
  if (!in_q_plus_) {
    throw DomainError(std::string(what) + ": angle triple (" +
                      std::to_string(t1_) + ", " + std::to_string(t2_) + ", " +
                      std::to_string(t3_) + ") lies outside [0, pi]^3");
  }
}

AngleTriple reduce_angles(const AngleQuadruplet& q) {
  auto diff = [](double x, double y) {
    const double d = wrap_angle(x - y);
    return d == -kPi ? kPi : d;
  };
  return AngleTriple(diff(q.theta_a(), q.theta_b()),
                     diff(q.theta_a_prime(), q.theta_b()),
                     diff(q.theta_a(), q.theta_b_prime()));
}

}  // namespace chshkit
