// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace mfpc {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that seeded runs
// reproduce bit-exactly on every platform; the platform default engines give
// no such guarantee for bounded draws.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Uniform draw from [0, n) by rejection, n >= 1.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng.next();
    if (r >= threshold) return r % n;
  }
}

// Fisher-Yates over the first `take` positions; the prefix is then a uniform
// sample without replacement.
template <typename T>
void shuffle_prefix(std::vector<T>& values, std::size_t take, SplitMix64& rng) {
  const std::size_t n = values.size();
  if (n == 0) return;
  if (take > n) take = n;
  for (std::size_t i = 0; i < take && i + 1 < n; ++i) {
    const std::size_t j = i + uniform_below(rng, n - i);
    std::swap(values[i], values[j]);
  }
}

template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  shuffle_prefix(values, values.size(), rng);
}

}  // namespace mfpc
