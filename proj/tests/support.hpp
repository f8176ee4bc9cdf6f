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

// Generators and brute-force oracles shared by the tests. The oracles work
// directly on bitmasks and definitions and never call the enumeration code
// they are checking.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "apxsub.hpp"

namespace apxsub::testing {

inline double brute_gap(const std::vector<double>& t, Mask a, Mask b) {
  return t[a | b] + t[a & b] - t[a] - t[b];
}

inline bool brute_in_class(ConstraintClass cls, Mask a, Mask b) {
  const bool incomparable = (a & ~b) != 0 && (b & ~a) != 0;
  if (!incomparable) return false;
  const int i = std::popcount(a & b);
  const int sa = std::popcount(a);
  const int sb = std::popcount(b);
  switch (cls) {
    case ConstraintClass::kFull: return true;
    case ConstraintClass::kDimin: return std::min(sa, sb) == i + 1;
    case ConstraintClass::kCross: return sa == i + 1 && sb == i + 1;
  }
  return false;
}

struct BruteEps {
  double epsilon = 0.0;
  std::uint64_t pairs = 0;
  Mask a = 0;
  Mask b = 0;
  bool has_witness = false;
};

// Quadratic scan over all A < B.
inline BruteEps brute_epsilon(const std::vector<double>& t, int n, ConstraintClass cls) {
  BruteEps r;
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      if (!brute_in_class(cls, a, b)) continue;
      ++r.pairs;
      const double g = brute_gap(t, a, b);
      if (g > r.epsilon) {
        r.epsilon = g;
        r.a = a;
        r.b = b;
        r.has_witness = true;
      }
    }
  }
  return r;
}

inline std::vector<double> table_of(const auto& f) {
  const int n = f.ground_size();
  std::vector<double> t(std::size_t{1} << n);
  for (Mask m = 0; m < t.size(); ++m) t[m] = f(Subset::from_mask(n, m));
  return t;
}

// Non-negative submodular: a non-negative cut plus a concave function of a
// non-negative modular weight, plus a constant.
inline ExplicitFunction random_submodular(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) w[i][j] = u(rng) < 0.6 ? u(rng) : 0.0;
  }
  std::vector<double> m(n);
  for (double& x : m) x = u(rng) * 2.0;
  const double c = u(rng);
  std::vector<double> t(std::size_t{1} << n);
  for (Mask s = 0; s < t.size(); ++s) {
    double cut = 0.0;
    double mod = 0.0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) mod += m[i];
      for (int j = i + 1; j < n; ++j) {
        if (((s >> i) & 1U) != ((s >> j) & 1U)) cut += w[i][j];
      }
    }
    t[s] = cut + std::sqrt(mod) + c;
  }
  return ExplicitFunction(n, std::move(t));
}

// Submodular base plus a perturbation bounded by `amp` in absolute value.
inline ExplicitFunction random_perturbed(int n, double amp, std::mt19937_64& rng) {
  const ExplicitFunction base = random_submodular(n, rng);
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<double> t = base.table();
  for (double& v : t) v += u(rng);
  return ExplicitFunction(n, std::move(t));
}

// Arbitrary values in [-scale, scale].
inline ExplicitFunction random_table(int n, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> t(std::size_t{1} << n);
  for (double& v : t) v = u(rng);
  return ExplicitFunction(n, std::move(t));
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace apxsub::testing
