// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

namespace chshkit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps x onto the half-open circle [-pi, pi). Throws DomainError for
/// non-finite input. Values already in range are returned unchanged, so the
/// map is idempotent.
double wrap_angle(double x);

/// Singlet correlation between spin projections at relative angle theta:
/// <a,b> = -cos(theta).
double twisted_malus(double theta);

/// Detector settings (theta_a, theta_a', theta_b, theta_b'), each wrapped
/// to [-pi, pi) on construction.
class AngleQuadruplet {
 public:
  AngleQuadruplet(double theta_a, double theta_a_prime, double theta_b,
                  double theta_b_prime);

  double theta_a() const { return theta_a_; }
  double theta_a_prime() const { return theta_a_prime_; }
  double theta_b() const { return theta_b_; }
  double theta_b_prime() const { return theta_b_prime_; }

 private:
  double theta_a_;
  double theta_a_prime_;
  double theta_b_;
  double theta_b_prime_;
};

/// Reduced coordinates (theta1, theta2, theta3) = (theta_ab, theta_a'b,
/// theta_ab'). Any triple can be represented; `in_q_plus()` reports whether
/// every coordinate lies in [0, pi]. Operations defined only on that cube call
/// `require_q_plus()`.
class AngleTriple {
 public:
  AngleTriple(double theta1, double theta2, double theta3);

  double theta1() const { return t1_; }
  double theta2() const { return t2_; }
  double theta3() const { return t3_; }
  /// theta_a'b' expressed through the other three: theta1 - (theta2 + theta3).
  double theta4() const { return t1_ - (t2_ + t3_); }

  double operator[](int i) const { return i == 0 ? t1_ : (i == 1 ? t2_ : t3_); }

  bool in_q_plus() const { return in_q_plus_; }
  bool on_diagonal() const { return t1_ == t2_ && t2_ == t3_; }

  /// Throws DomainError naming `what` if the triple is outside [0, pi]^3.
  void require_q_plus(const char* what) const;

  friend bool operator==(const AngleTriple&, const AngleTriple&) = default;

 private:
  double t1_;
  double t2_;
  double t3_;
  bool in_q_plus_;
};

/// Wrapped pairwise differences of a quadruplet. A wrapped difference of
/// exactly -pi is read as +pi (the two are identified on the circle and only
/// +pi belongs to [0, pi]).
AngleTriple reduce_angles(const AngleQuadruplet& q);

}  // namespace chshkit
