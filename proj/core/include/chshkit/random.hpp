// SPDX-License-Identifier: Apache-2.0

// Seeded randomness shared by the samplers and the quasi-random point sets.
//
// Streams are std::mt19937_64 engines whose output sequence is fixed by the
// C++ standard. A stream for chunk k of a run seeded with s is initialized with
// chunk_seed(s, k) = splitmix64(s ^ splitmix64(k)). Uniform doubles take the
// top 53 bits of one engine draw. Standard <random> distributions are avoided
// because their algorithms are implementation-defined.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace chshkit {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// One step of the SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the independent stream used for chunk `chunk` of a seeded run.
std::uint64_t chunk_seed(Seed seed, std::uint64_t chunk);

/// Trials per chunk in every chunked sampler. Part of the reproducibility
/// contract: changing it changes every seeded output.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chshkit
