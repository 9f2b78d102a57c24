// SPDX-License-Identifier: Apache-2.0

#include "chshkit/random.hpp"

namespace chshkit {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(Seed seed, std::uint64_t chunk) {
  return splitmix64(seed.value ^ splitmix64(chunk));
}

}  // namespace chshkit
