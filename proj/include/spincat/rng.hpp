// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace spincat {

/// SplitMix64 generator. Fully specified arithmetic, so sequences are
/// bit-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Independent stream keyed on (seed, index). Streams are decorrelated by
/// hashing, so experiment i is reproducible no matter which thread runs it.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ 0xA02BDBF7BB3C0A7ULL);
  std::uint64_t a = mixer.next();
  return SplitMix64(a + index * 0x9E3779B97F4A7C15ULL);
}

}  // namespace spincat
