// Copyright 2026 The Authors.
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

// Counter-based random numbers.
//
// All randomness in the library is drawn from Philox4x32-10 (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11). A draw is a pure
// function of a 64-bit key and a 128-bit counter, so results do not depend
// on call order, thread schedule, or platform. Distributions are computed
// here rather than through <random> because the standard distributions are
// not specified bit-for-bit.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace apxsub {

using Seed = std::uint64_t;

struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53U;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57U;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9U;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85U;

  static constexpr Counter apply(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }
};

// SplitMix64 finalizer; used as the fixed 64-bit mixing function.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Child seed for a labelled sub-stream, e.g. derive_seed(master, trial).
constexpr Seed derive_seed(Seed parent, std::uint64_t label) {
  return mix64(parent ^ mix64(label + 0x632BE59BD9B4E019ULL));
}

// Two 64-bit words for (key, stream, index).
constexpr std::array<std::uint64_t, 2> philox_words(Seed key,
                                                    std::uint64_t stream,
                                                    std::uint64_t index) {
  const Philox4x32::Counter ctr = {
      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
  const Philox4x32::Key k = {static_cast<std::uint32_t>(key),
                             static_cast<std::uint32_t>(key >> 32)};
  const auto r = Philox4x32::apply(ctr, k);
  return {(std::uint64_t{r[1]} << 32) | r[0], (std::uint64_t{r[3]} << 32) | r[2]};
}

// Uniform double in [0, 1) from the top 53 bits of a word.
constexpr double to_unit(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Standard normal from one Philox block via Box-Muller (cosine branch).
inline double normal_from_words(const std::array<std::uint64_t, 2>& w) {
  const double u1 = 1.0 - to_unit(w[0]);  // (0, 1]
  const double u2 = to_unit(w[1]);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Sequential view of one (key, stream) pair. Each call consumes one counter
// value, so the i-th draw is the same regardless of what happened before.
class CounterStream {
 public:
  CounterStream(Seed key, std::uint64_t stream) : key_(key), stream_(stream) {}

  std::uint64_t next_u64() {
    if (!have_spare_) {
      block_ = philox_words(key_, stream_, counter_++);
      have_spare_ = true;
      return block_[0];
    }
    have_spare_ = false;
    return block_[1];
  }

  double uniform() { return to_unit(next_u64()); }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

  double normal() {
    const std::array<std::uint64_t, 2> w = {next_u64(), next_u64()};
    return normal_from_words(w);
  }

  std::uint64_t draws() const { return counter_; }

 private:
  Seed key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> block_{};
  bool have_spare_ = false;
};

}  // namespace apxsub
