// Copyright 2026 The Gridnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>

namespace gridnav {

/// PCG32 (XSH-RR 64/32) generator, O'Neill's reference formulation.
/// One (seed, stream) pair selects an independent sequence; the simulator
/// assigns a distinct stream per noise source so that, e.g., adding LiDAR
/// beams never perturbs the encoder noise sequence. All randomness in the
/// project flows through this class so runs reproduce across platforms.
class Pcg32 {
 public:
  explicit Pcg32(uint64_t seed, uint64_t stream = 0) {
    state_ = 0u;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  uint64_t next_u64() {
    uint64_t hi = next_u32();
    uint64_t lo = next_u32();
    return (hi << 32u) | lo;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53;
  }

  /// Uniform double strictly inside (0, 1); never returns an exact endpoint.
  double next_double_open() {
    return (static_cast<double>(next_u32()) + 0.5) * 0x1.0p-32;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Gaussian sample via Box-Muller. Always consumes exactly two uniform
  /// draws, so the stream position does not depend on the std value.
  double gaussian(double mean, double stddev) {
    double u1 = next_double_open();
    double u2 = next_double();
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
    return mean + stddev * z;
  }

  /// Uniform integer in [0, bound) by rejection (unbiased).
  uint32_t bounded(uint32_t bound) {
    uint32_t threshold = (-bound) % bound;
    for (;;) {
      uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static constexpr double kTau = 6.28318530717958647692;
  uint64_t state_;
  uint64_t inc_;
};

/// splitmix64 finalizer, used to derive well-spread per-entity seeds
/// (e.g. one sub-stream per particle) from a base seed and an index.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stream selectors for the per-sensor noise sequences.
enum RngStream : uint64_t {
  kStreamEncoders = 1,
  kStreamLidar = 2,
  kStreamMclInit = 3,
  kStreamMclMotion = 4,
  kStreamMclResample = 5,
};

}  // namespace gridnav
