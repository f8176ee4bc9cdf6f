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

// Additive per-subset noise: f(S) = base(S) + Z_S.
//
// Z_S is never stored. It is recomputed from (seed, canonical encoding of S)
// on every query, which makes repeated queries agree without a memo table.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "apxsub/random.hpp"
#include "apxsub/set_function.hpp"
#include "apxsub/subset.hpp"

namespace apxsub {

enum class NoiseKind { kNone, kGaussian, kRademacher };

struct NoiseModel {
  NoiseKind kind = NoiseKind::kNone;
  // Variance for kGaussian, magnitude c for kRademacher.
  double scale = 0.0;
  Seed seed = 0;

  static NoiseModel none() { return {}; }
  static NoiseModel gaussian(double sigma2, Seed seed) {
    if (!(sigma2 >= 0.0)) throw std::invalid_argument("variance must be >= 0");
    return {NoiseKind::kGaussian, sigma2, seed};
  }
  static NoiseModel rademacher(double c, Seed seed) {
    if (!(c >= 0.0)) throw std::invalid_argument("magnitude must be >= 0");
    return {NoiseKind::kRademacher, c, seed};
  }
};

// Bitmask in the dense regime; otherwise a fixed mix of the sorted element
// list. The regime tag keeps the two encodings in disjoint Philox streams.
struct SubsetKey {
  std::uint64_t regime;
  std::uint64_t code;
};

inline SubsetKey canonical_key(const Subset& s) {
  if (s.universe() <= kDenseLimit) return {0, s.mask()};
  std::uint64_t h = mix64(static_cast<std::uint64_t>(s.universe()));
  s.for_each([&](int e) { h = mix64(h ^ static_cast<std::uint64_t>(e)); });
  return {1, h};
}

inline double noise_draw(const NoiseModel& model, const Subset& s) {
  switch (model.kind) {
    case NoiseKind::kNone:
      return 0.0;
    case NoiseKind::kGaussian: {
      const SubsetKey key = canonical_key(s);
      return std::sqrt(model.scale) *
             normal_from_words(philox_words(model.seed, key.regime, key.code));
    }
    case NoiseKind::kRademacher: {
      const SubsetKey key = canonical_key(s);
      const auto w = philox_words(model.seed, key.regime, key.code);
      return (w[0] >> 63) != 0 ? model.scale : -model.scale;
    }
  }
  throw std::logic_error("unknown noise kind");
}

template <SetFunction F>
class NoisyFunction {
 public:
  NoisyFunction(F base, NoiseModel model)
      : base_(std::move(base)), model_(model) {}

  int ground_size() const { return base_.ground_size(); }
  double operator()(const Subset& s) const {
    return base_(s) + noise_draw(model_, s);
  }
  const F& base() const { return base_; }
  const NoiseModel& model() const { return model_; }

 private:
  F base_;
  NoiseModel model_;
};

template <SetFunction F>
NoisyFunction<F> noisy_function(F base, NoiseModel model) {
  return NoisyFunction<F>(std::move(base), model);
}

}  // namespace apxsub
