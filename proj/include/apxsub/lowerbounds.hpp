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

// Block functions and the extremal constructions for distance lower bounds.
//
// A (t_1, ..., t_k)-block function depends on S only through the profile
// (|S n S_1|, ..., |S n S_k|), where the blocks S_i are consecutive index
// ranges of sizes t_i. The map from profiles to values is the cardinality
// representation F.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apxsub/set_function.hpp"
#include "apxsub/subset.hpp"

namespace apxsub {

using Profile = std::vector<int>;
using CardinalityRep = std::function<double(std::span<const int>)>;

class BlockFunction {
 public:
  BlockFunction(std::vector<int> block_sizes, CardinalityRep card_rep)
      : sizes_(std::move(block_sizes)), rep_(std::move(card_rep)) {
    if (sizes_.empty()) throw std::invalid_argument("need at least one block");
    for (int t : sizes_) {
      if (t < 1) throw std::invalid_argument("block sizes must be >= 1");
    }
    for (int b = 0; b < static_cast<int>(sizes_.size()); ++b) {
      block_of_.insert(block_of_.end(), static_cast<std::size_t>(sizes_[b]), b);
    }
  }

  int ground_size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& block_sizes() const { return sizes_; }

  Profile profile(const Subset& s) const {
    check_universe(s, ground_size());
    Profile p(sizes_.size(), 0);
    s.for_each([&](int e) { ++p[block_of_[e]]; });
    return p;
  }

  double card_rep(std::span<const int> profile) const {
    if (profile.size() != sizes_.size()) {
      throw std::out_of_range("profile length does not match block count");
    }
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (profile[i] < 0 || profile[i] > sizes_[i]) {
        throw std::out_of_range("profile entry out of range");
      }
    }
    return rep_(profile);
  }

  double operator()(const Subset& s) const {
    const Profile p = profile(s);
    return rep_(p);
  }

 private:
  std::vector<int> sizes_;
  CardinalityRep rep_;
  std::vector<int> block_of_;
};

inline double block_eval(const BlockFunction& bf, const Subset& s) { return bf(s); }

// Lower bound on the l-infinity distance of a block function to the nearest
// submodular function:
//
//   nu = 1/2 * prod_j (t_j-1)/t_j * F(0,...,0)
//      + sum_i [ prod_{j>i} (t_j-1)/t_j / (2 t_i) ] * F(1,...,1, t_i, 0,...,0)
//      - 1/2 * F(1,...,1)
inline double nu(const BlockFunction& bf) {
  const auto& t = bf.block_sizes();
  const int k = bf.block_count();
  auto shrink = [&](int j) {
    return static_cast<double>(t[j] - 1) / static_cast<double>(t[j]);
  };

  Profile zeros(k, 0);
  Profile ones(k, 1);
  double prod_all = 1.0;
  for (int j = 0; j < k; ++j) prod_all *= shrink(j);
  double total = 0.5 * prod_all * bf.card_rep(zeros);

  for (int i = 0; i < k; ++i) {
    double tail = 1.0;
    for (int j = i + 1; j < k; ++j) tail *= shrink(j);
    Profile p(k, 0);
    for (int j = 0; j < i; ++j) p[j] = 1;
    p[i] = t[i];
    total += tail / (2.0 * t[i]) * bf.card_rep(p);
  }
  return total - 0.5 * bf.card_rep(ones);
}

// The (2, 3, ..., k+1)-block function f_k on n_k = k(k+3)/2 elements.
// Backbone sets meet at most one block in two or more elements; there
//   f_k(S) = (M_S + Z_S - [S != {}]) / 2
// with M_S the largest block intersection and Z_S the number of missed
// blocks. Elsewhere f_k(S) = -(k+2)^|S|.
class FkFunction {
 public:
  explicit FkFunction(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
  }

  int k() const { return k_; }
  int ground_size() const { return k_ * (k_ + 3) / 2; }

  std::vector<int> block_sizes() const {
    std::vector<int> t(static_cast<std::size_t>(k_));
    std::iota(t.begin(), t.end(), 2);
    return t;
  }

  static bool in_backbone(std::span<const int> profile) {
    return std::count_if(profile.begin(), profile.end(),
                         [](int c) { return c >= 2; }) <= 1;
  }

  double value_of_profile(std::span<const int> profile) const {
    const int card = std::accumulate(profile.begin(), profile.end(), 0);
    if (!in_backbone(profile)) {
      return -std::pow(static_cast<double>(k_ + 2), card);
    }
    const int m = *std::max_element(profile.begin(), profile.end());
    const auto z = std::count(profile.begin(), profile.end(), 0);
    return (m + static_cast<double>(z) - (card > 0 ? 1.0 : 0.0)) / 2.0;
  }

  BlockFunction as_block() const {
    const int k = k_;
    return BlockFunction(block_sizes(), [k](std::span<const int> p) {
      return FkFunction(k).value_of_profile(p);
    });
  }

  double operator()(const Subset& s) const {
    check_universe(s, ground_size());
    Profile p(static_cast<std::size_t>(k_), 0);
    int start = 0;
    for (int b = 0; b < k_; ++b) {
      const int len = b + 2;
      for (int e = start; e < start + len; ++e) p[b] += s.contains(e) ? 1 : 0;
      start += len;
    }
    return value_of_profile(p);
  }

 private:
  int k_;
};

inline FkFunction make_fk(int k) { return FkFunction(k); }

// max(0, |S| - (n-1)/2) on an odd ground set.
inline BlockFunction make_lbdimin(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
  const int half = (n - 1) / 2;
  return BlockFunction({n}, [half](std::span<const int> p) {
    return static_cast<double>(std::max(0, p[0] - half));
  });
}

// (n - 2|S|)^2 / 8.
inline BlockFunction make_lbcross(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return BlockFunction({n}, [n](std::span<const int> p) {
    const double d = n - 2.0 * p[0];
    return d * d / 8.0;
  });
}

// k blocks of equal size; log2 of the largest intersection, 0 on {}.
inline BlockFunction make_log_block(int k, int block_size) {
  if (k < 1 || block_size < 1) {
    throw std::invalid_argument("k and block_size must be >= 1");
  }
  return BlockFunction(std::vector<int>(static_cast<std::size_t>(k), block_size),
                       [](std::span<const int> p) {
                         const int m = *std::max_element(p.begin(), p.end());
                         return m == 0 ? 0.0 : std::log2(static_cast<double>(m));
                       });
}

// f - min f; every constraint gap is unchanged.
template <SetFunction F>
ExplicitFunction shift_nonneg(const F& f) {
  ExplicitFunction e = to_explicit(f);
  const auto& table = e.table();
  const double lo = *std::min_element(table.begin(), table.end());
  std::vector<double> shifted(table.size());
  std::transform(table.begin(), table.end(), shifted.begin(),
                 [lo](double v) { return v - lo; });
  return ExplicitFunction(e.ground_size(), std::move(shifted));
}

// Reads a table as a block function over consecutive blocks of the given
// sizes. Empty when some profile takes two values differing by more than tol.
inline std::optional<BlockFunction> as_block_function(const ExplicitFunction& f,
                                                      std::vector<int> sizes,
                                                      double tol = 1e-12) {
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != f.ground_size()) {
    throw std::invalid_argument("block sizes must sum to the ground-set size");
  }
  std::size_t cells = 1;
  for (int t : sizes) {
    if (t < 1) throw std::invalid_argument("block sizes must be >= 1");
    cells *= static_cast<std::size_t>(t + 1);
  }
  auto index_of = [sizes](std::span<const int> p) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      idx = idx * static_cast<std::size_t>(sizes[i] + 1) + static_cast<std::size_t>(p[i]);
    }
    return idx;
  };
  BlockFunction shape(sizes, [](std::span<const int>) { return 0.0; });
  auto values = std::make_shared<std::vector<double>>(
      cells, std::numeric_limits<double>::quiet_NaN());
  const int n = f.ground_size();
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const Profile p = shape.profile(Subset::from_mask(n, m));
    double& slot = (*values)[index_of(p)];
    if (std::isnan(slot)) {
      slot = f.at(m);
    } else if (std::abs(slot - f.at(m)) > tol) {
      return std::nullopt;
    }
  }
  return BlockFunction(std::move(sizes), [values, index_of](std::span<const int> p) {
    return (*values)[index_of(p)];
  });
}

}  // namespace apxsub
