// Copyright 2026 The swapreg Authors.
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

#ifndef SWAPREG_RNG_HPP_
#define SWAPREG_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

namespace swapreg {

// Stream ids; predictor and adversary draws never share a stream.
enum class RngStream : std::uint64_t { kPredictor = 1, kAdversary = 2 };

// Counter-based generator: draw k is a SplitMix64 finalization of
// key + k * golden, so any draw can be recomputed from (seed, stream, k).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, RngStream stream)
      : key_(Mix(seed ^ Mix(static_cast<std::uint64_t>(stream) * kGolden))) {}

  std::uint64_t NextU64() { return Mix(key_ + kGolden * ++counter_); }

  // Uniform on [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Inverse-CDF draw over a dense probability vector. Zero-probability entries
// are never returned.
inline std::size_t SampleIndex(std::span<const double> probs, double u) {
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

}  // namespace swapreg

#endif  // SWAPREG_RNG_HPP_
