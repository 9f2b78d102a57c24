// SPDX-License-Identifier: Apache-2.0

// Seeded Monte Carlo generators for outcome sequences.
//
// All samplers split the n trials into chunks of kChunkSize and draw chunk k
// from its own stream (see random.hpp), so output depends only on the
// parameters and the seed, never on how many threads ran the chunks.

#pragma once

#include <array>
#include <cstddef>

#include "chshkit/outcomes.hpp"
#include "chshkit/random.hpp"

namespace chshkit {

struct SequencePair {
  OutcomeSequence a;
  OutcomeSequence b;
};

/// The four sequences entering the CHSH inequalities: Alice's factual and
/// counterfactual settings (a_oo, a_bo) and Bob's (b_oo, b_ob).
///
/// The counterfactual partners b_bo (Bob's record when only Alice switches)
/// and a_ob (Alice's record when only Bob switches) are the factual records
/// themselves once registered values cannot depend on later remote choices,
/// so they are exposed as aliases rather than stored.
class OctetSequences {
 public:
  /// Throws ShapeError unless all four lengths agree.
  OctetSequences(OutcomeSequence a_oo, OutcomeSequence b_oo,
                 OutcomeSequence a_bo, OutcomeSequence b_ob);

  const OutcomeSequence& a_oo() const { return a_oo_; }
  const OutcomeSequence& b_oo() const { return b_oo_; }
  const OutcomeSequence& a_bo() const { return a_bo_; }
  const OutcomeSequence& b_ob() const { return b_ob_; }
  const OutcomeSequence& b_bo() const { return b_oo_; }
  const OutcomeSequence& a_ob() const { return a_oo_; }

  std::size_t size() const { return a_oo_.size(); }

 private:
  OutcomeSequence a_oo_;
  OutcomeSequence b_oo_;
  OutcomeSequence a_bo_;
  OutcomeSequence b_ob_;
};

/// Position of each sequence inside a JointDistribution4 sign pattern.
enum class Slot : int { a_oo = 0, b_oo = 1, a_bo = 2, b_ob = 3 };

/// Probabilities over the 16 sign patterns of (a_oo, b_oo, a_bo, b_ob).
/// Pattern index bit (3 - slot) set means that slot reads -1, so index 0 is
/// (+,+,+,+) and index 15 is (-,-,-,-).
struct JointDistribution4 {
  std::array<double, 16> p{};

  static int sign(std::size_t pattern, Slot slot) {
    return ((pattern >> (3 - static_cast<int>(slot))) & 1u) ? -1 : 1;
  }

  static JointDistribution4 uniform();
  static JointDistribution4 point_mass(std::size_t pattern);

  /// E[s_x s_y] under this distribution.
  double moment(Slot x, Slot y) const;

  bool is_valid() const;
  /// Throws DomainError unless entries are finite, >= -1e-12 and sum to 1
  /// within 1e-12.
  void validate() const;
};

/// n independent singlet pairs at relative angle theta.
SequencePair sample_singlet_pairs(double theta, std::size_t n, Seed seed);

/// n draws of a deterministic local model: lambda ~ U[0, 2pi),
/// a = sign(cos(lambda - theta_a)), b = -sign(cos(lambda - theta_b)),
/// sign(0) = +1.
SequencePair sample_lhv_pairs(double theta_a, double theta_b, std::size_t n,
                              Seed seed);

/// Expected correlation of sample_lhv_pairs: -1 + 2|d|/pi with d the wrapped
/// setting difference.
double lhv_expected_correlation(double theta_a, double theta_b);

/// n independent sign patterns drawn from `dist`.
OctetSequences sample_octet(const JointDistribution4& dist, std::size_t n,
                            Seed seed);

}  // namespace chshkit
