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

// Ground sets and subsets.
//
// A Subset is a fixed-universe bitset over {0, ..., n-1}. Small universes
// (n <= kDenseLimit) additionally admit full enumeration of all 2^n subsets,
// addressed by their bitmask.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace apxsub {

using Mask = std::uint64_t;

// Largest ground set for which tables over all subsets are materialized.
inline constexpr int kDenseLimit = 25;

// Raised when an operation needs full enumeration beyond its size limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void require_dense(int n, int limit = kDenseLimit,
                          const char* what = "dense enumeration") {
  if (n > limit) {
    throw SizeLimitError(std::string(what) + " requires n <= " +
                         std::to_string(limit) + ", got n = " +
                         std::to_string(n));
  }
}

class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ground set needs n >= 1");
  }
  int size() const { return n_; }
  bool dense() const { return n_ <= kDenseLimit; }
  // Number of subsets; only meaningful in the dense regime.
  Mask subset_count() const {
    require_dense(n_);
    return Mask{1} << n_;
  }
  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

class Subset {
 public:
  Subset() = default;
  explicit Subset(int n) : n_(n), words_(word_count(n), 0) {
    if (n < 0) throw std::invalid_argument("negative universe size");
  }
  Subset(int n, std::initializer_list<int> elements) : Subset(n) {
    for (int e : elements) insert(e);
  }

  static Subset from_mask(int n, Mask mask) {
    if (n < 64 && (mask >> n) != 0) {
      throw std::out_of_range("bitmask has bits beyond the ground set");
    }
    Subset s(n);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }
  static Subset from_indices(int n, const std::vector<int>& elements) {
    Subset s(n);
    for (int e : elements) s.insert(e);
    return s;
  }
  static Subset full(int n) {
    Subset s(n);
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int e) const {
    check(e);
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }
  void insert(int e) {
    check(e);
    words_[e >> 6] |= Mask{1} << (e & 63);
  }
  void erase(int e) {
    check(e);
    words_[e >> 6] &= ~(Mask{1} << (e & 63));
  }
  Subset with(int e) const {
    Subset s = *this;
    s.insert(e);
    return s;
  }
  Subset without(int e) const {
    Subset s = *this;
    s.erase(e);
    return s;
  }

  int size() const {
    int c = 0;
    for (Mask w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Mask w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  Subset complement() const {
    Subset s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  // Bitmask view; only valid for universes of at most 64 elements.
  Mask mask() const {
    if (n_ > 64) throw std::out_of_range("subset universe exceeds 64 bits");
    return words_.empty() ? 0 : words_[0];
  }

  // Ascending element list (the sparse-regime representation).
  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Mask bits = words_[w];
      while (bits != 0) {
        int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check_same(b);
    Subset s = a;
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] |= b.words_[i];
    return s;
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check_same(b);
    Subset s = a;
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] &= b.words_[i];
    return s;
  }

  bool operator==(const Subset&) const = default;

 private:
  static std::size_t word_count(int n) {
    return n <= 0 ? 0 : static_cast<std::size_t>((n + 63) / 64);
  }
  void check(int e) const {
    if (e < 0 || e >= n_) {
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside ground set of size " +
                              std::to_string(n_));
    }
  }
  void check_same(const Subset& other) const {
    if (n_ != other.n_) throw std::invalid_argument("subset universes differ");
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (Mask{1} << (n_ % 64)) - 1;
    }
  }

  int n_ = 0;
  std::vector<Mask> words_;
};

}  // namespace apxsub
