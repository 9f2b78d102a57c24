// SPDX-License-Identifier: Apache-2.0

#include "chshkit/sampler.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "chshkit/angles.hpp"
#include "chshkit/errors.hpp"
#include "chshkit/parallel.hpp"

namespace chshkit {

namespace {

/// Inverse-CDF lookup over a small table of cell probabilities. Cells with
/// zero mass are never selected.
template <std::size_t N>
class Categorical {
 public:
  explicit Categorical(const std::array<double, N>& p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      acc += p[i] > 0.0 ? p[i] : 0.0;
      cumulative_[i] = acc;
      if (p[i] > 0.0) {
        last_positive_ = i;
      }
    }
  }

  std::size_t draw(double u) const {
    for (std::size_t i = 0; i < N; ++i) {
      if (u < cumulative_[i]) {
        return i;
      }
    }
    return last_positive_;
  }

 private:
  std::array<double, N> cumulative_{};
  std::size_t last_positive_ = 0;
};

void require_trials(std::size_t n, const char* what) {
  if (n == 0) {
    throw DomainError(std::string(what) + ": n must be at least 1");
  }
}

/// Runs body(stream, begin, end) for every chunk of [0, n).
template <typename Body>
void for_each_chunk(std::size_t n, Seed seed, Body&& body) {
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  parallel_for(chunks, [&](std::size_t c) {
    Stream stream(chunk_seed(seed, c));
    const std::size_t begin = c * kChunkSize;
    const std::size_t end = std::min(n, begin + kChunkSize);
    body(stream, begin, end);
  });
}

std::int8_t sign_of(double x) { return x >= 0.0 ? 1 : -1; }

}  // namespace

OctetSequences::OctetSequences(OutcomeSequence a_oo, OutcomeSequence b_oo,
                               OutcomeSequence a_bo, OutcomeSequence b_ob)
    : a_oo_(std::move(a_oo)),
      b_oo_(std::move(b_oo)),
      a_bo_(std::move(a_bo)),
      b_ob_(std::move(b_ob)) {
  const std::size_t n = a_oo_.size();
  if (b_oo_.size() != n || a_bo_.size() != n || b_ob_.size() != n) {
    throw ShapeError("OctetSequences: all four sequences must have equal length");
  }
}

JointDistribution4 JointDistribution4::uniform() {
  JointDistribution4 d;
  d.p.fill(1.0 / 16.0);
  return d;
}

JointDistribution4 JointDistribution4::point_mass(std::size_t pattern) {
  if (pattern >= 16) {
    throw DomainError("JointDistribution4::point_mass: pattern out of range");
  }
  JointDistribution4 d;
  d.p[pattern] = 1.0;
  return d;
}

double JointDistribution4::moment(Slot x, Slot y) const {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    m += p[i] * sign(i, x) * sign(i, y);
  }
  return m;
}

bool JointDistribution4::is_valid() const {
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -kProbabilityTolerance) {
      return false;
    }
    total += v;
  }
  return std::abs(total - 1.0) <= kProbabilityTolerance;
}

void JointDistribution4::validate() const {
  if (!is_valid()) {
    throw DomainError(
        "JointDistribution4: entries must be nonnegative and sum to 1");
  }
}

SequencePair sample_singlet_pairs(double theta, std::size_t n, Seed seed) {
  require_trials(n, "sample_singlet_pairs");
  const JointDistribution2 joint = singlet_joint(theta);
  const Categorical<4> cells({joint.p_pp, joint.p_pm, joint.p_mp, joint.p_mm});

  std::vector<std::int8_t> a(n);
  std::vector<std::int8_t> b(n);
  for_each_chunk(n, seed, [&](Stream& stream, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t cell = cells.draw(stream.uniform());
      a[i] = (cell & 2u) ? -1 : 1;
      b[i] = (cell & 1u) ? -1 : 1;
    }
  });
  return {OutcomeSequence(std::move(a)), OutcomeSequence(std::move(b))};
}

SequencePair sample_lhv_pairs(double theta_a, double theta_b, std::size_t n,
                              Seed seed) {
  require_trials(n, "sample_lhv_pairs");
  if (!std::isfinite(theta_a) || !std::isfinite(theta_b)) {
    throw DomainError("sample_lhv_pairs: non-finite angle");
  }
  std::vector<std::int8_t> a(n);
  std::vector<std::int8_t> b(n);
  for_each_chunk(n, seed, [&](Stream& stream, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double lambda = kTwoPi * stream.uniform();
      a[i] = sign_of(std::cos(lambda - theta_a));
      b[i] = static_cast<std::int8_t>(-sign_of(std::cos(lambda - theta_b)));
    }
  });
  return {OutcomeSequence(std::move(a)), OutcomeSequence(std::move(b))};
}

double lhv_expected_correlation(double theta_a, double theta_b) {
  const double d = std::abs(wrap_angle(theta_a - theta_b));
  return -1.0 + 2.0 * d / kPi;
}

OctetSequences sample_octet(const JointDistribution4& dist, std::size_t n,
                            Seed seed) {
  require_trials(n, "sample_octet");
  dist.validate();
  const Categorical<16> patterns(dist.p);

  std::array<std::vector<std::int8_t>, 4> seqs;
  for (auto& s : seqs) {
    s.resize(n);
  }
  for_each_chunk(n, seed, [&](Stream& stream, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t pattern = patterns.draw(stream.uniform());
      for (int slot = 0; slot < 4; ++slot) {
        seqs[slot][i] = static_cast<std::int8_t>(
            JointDistribution4::sign(pattern, static_cast<Slot>(slot)));
      }
    }
  });
  return OctetSequences(OutcomeSequence(std::move(seqs[0])),
                        OutcomeSequence(std::move(seqs[1])),
                        OutcomeSequence(std::move(seqs[2])),
                        OutcomeSequence(std::move(seqs[3])));
}

}  // namespace chshkit
