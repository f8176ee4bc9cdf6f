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

// Submodularity constraint families and approximation parameters.
//
// For a pair {A, B} the gap is f(A u B) + f(A n B) - f(A) - f(B); f is
// submodular on a family when every gap is <= 0, and eps-approximately so
// when every gap is <= eps. Three nested families are supported:
//
//   Full   all incomparable pairs, min(|A|,|B|) >= |A n B| + 1
//   Dimin  min(|A|,|B|) == |A n B| + 1
//   Cross  |A| == |B| == |A n B| + 1
//
// Cross is the smallest of the three and already implies submodularity.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apxsub/parallel.hpp"
#include "apxsub/random.hpp"
#include "apxsub/set_function.hpp"
#include "apxsub/subset.hpp"

namespace apxsub {

enum class ConstraintClass { kFull, kDimin, kCross };

inline std::string_view to_string(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::kFull: return "full";
    case ConstraintClass::kDimin: return "dimin";
    case ConstraintClass::kCross: return "cross";
  }
  return "?";
}

inline ConstraintClass parse_constraint_class(std::string_view s) {
  if (s == "full") return ConstraintClass::kFull;
  if (s == "dimin") return ConstraintClass::kDimin;
  if (s == "cross") return ConstraintClass::kCross;
  throw std::invalid_argument("unknown constraint class '" + std::string(s) + "'");
}

// Unordered pair, stored with a < b as bitmasks.
struct ConstraintPair {
  Mask a;
  Mask b;
  bool operator==(const ConstraintPair&) const = default;
  auto operator<=>(const ConstraintPair&) const = default;
};

inline int enumeration_limit(ConstraintClass c) {
  return c == ConstraintClass::kFull ? 14 : kDenseLimit;
}

inline bool in_class(ConstraintClass c, Mask a, Mask b) {
  const int ia = popcount(a & b);
  const int ka = popcount(a);
  const int kb = popcount(b);
  switch (c) {
    case ConstraintClass::kFull: return std::min(ka, kb) >= ia + 1;
    case ConstraintClass::kDimin: return std::min(ka, kb) == ia + 1;
    case ConstraintClass::kCross: return ka == ia + 1 && kb == ia + 1;
  }
  return false;
}

inline double gap(const ExplicitFunction& f, Mask a, Mask b) {
  return f.at(a | b) + f.at(a & b) - f.at(a) - f.at(b);
}
inline double gap(const ExplicitFunction& f, const ConstraintPair& p) {
  return gap(f, p.a, p.b);
}

namespace detail {

inline ConstraintPair ordered(Mask x, Mask y) {
  return x < y ? ConstraintPair{x, y} : ConstraintPair{y, x};
}

// Outer loop variable: A for Full, the intersection A n B otherwise.
inline Mask outer_count(int n) { return Mask{1} << n; }

template <typename Fn>
void pairs_for_outer(int n, ConstraintClass cls, Mask outer, Fn&& fn) {
  const Mask all = full_mask(n);
  switch (cls) {
    case ConstraintClass::kFull: {
      const Mask a = outer;
      for (Mask b = a + 1; b <= all; ++b) {
        if ((a & ~b) != 0 && (b & ~a) != 0) fn(ConstraintPair{a, b});
      }
      break;
    }
    case ConstraintClass::kCross: {
      const Mask c = outer;
      const Mask rest = all & ~c;
      for (Mask xs = rest; xs != 0; xs &= xs - 1) {
        const Mask x = xs & (~xs + 1);
        for (Mask ys = xs & (xs - 1); ys != 0; ys &= ys - 1) {
          const Mask y = ys & (~ys + 1);
          fn(ConstraintPair{c | x, c | y});
        }
      }
      break;
    }
    case ConstraintClass::kDimin: {
      // Smaller side is C + {x}; the larger side is C + D with D nonempty and
      // disjoint from C + {x}. Equal sizes (|D| = 1) would appear twice, so
      // those keep only x < d.
      const Mask c = outer;
      const Mask rest = all & ~c;
      for (Mask xs = rest; xs != 0; xs &= xs - 1) {
        const Mask x = xs & (~xs + 1);
        const Mask others = rest & ~x;
        for (Mask d = others; d != 0; d = (d - 1) & others) {
          if ((d & (d - 1)) == 0 && d < x) continue;
          fn(ordered(c | x, c | d));
        }
      }
      break;
    }
  }
}

}  // namespace detail

inline void check_enumeration_size(int n, ConstraintClass cls) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  require_dense(n, enumeration_limit(cls),
                (std::string(to_string(cls)) + "-pair enumeration").c_str());
}

// Visits every pair of the family once.
template <typename Fn>
void for_each_pair(int n, ConstraintClass cls, Fn&& fn) {
  check_enumeration_size(n, cls);
  const Mask outer = detail::outer_count(n);
  for (Mask o = 0; o < outer; ++o) detail::pairs_for_outer(n, cls, o, fn);
}

inline std::vector<ConstraintPair> enumerate_pairs(int n, ConstraintClass cls) {
  std::vector<ConstraintPair> out;
  for_each_pair(n, cls, [&](const ConstraintPair& p) { out.push_back(p); });
  return out;
}

struct EpsilonReport {
  ConstraintClass cls = ConstraintClass::kCross;
  double epsilon = 0.0;
  // Pair attaining the largest gap; empty when no gap is positive.
  std::optional<ConstraintPair> witness;
  std::uint64_t pairs_checked = 0;
};

inline EpsilonReport exact_epsilon(const ExplicitFunction& f,
                                   ConstraintClass cls,
                                   unsigned threads = default_thread_count()) {
  const int n = f.ground_size();
  check_enumeration_size(n, cls);

  struct Best {
    double gap = 0.0;
    std::optional<ConstraintPair> pair;
    std::uint64_t count = 0;
    // Larger gap wins; ties go to the lexicographically smaller pair, which
    // is the first one in (A, B) ascending order.
    void offer(double g, const ConstraintPair& p) {
      ++count;
      if (g <= 0.0) return;
      if (!pair || g > gap || (g == gap && p < *pair)) {
        gap = g;
        pair = p;
      }
    }
    void merge(const Best& o) {
      count += o.count;
      if (!o.pair) return;
      if (!pair || o.gap > gap || (o.gap == gap && *o.pair < *pair)) {
        gap = o.gap;
        pair = o.pair;
      }
    }
  };

  const Mask outer = detail::outer_count(n);
  // Pair counts are skewed towards small outer indices for Full, so chunks
  // are interleaved rather than contiguous.
  const unsigned workers =
      outer < 64 ? 1U : std::max(1U, threads);
  std::vector<Best> partial(workers);
  parallel_chunks(workers, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t w = lo; w < hi; ++w) {
      Best& best = partial[w];
      for (Mask o = w; o < outer; o += workers) {
        detail::pairs_for_outer(n, cls, o, [&](const ConstraintPair& p) {
          best.offer(gap(f, p), p);
        });
      }
    }
  });
  Best total;
  for (const Best& b : partial) total.merge(b);

  EpsilonReport report;
  report.cls = cls;
  report.epsilon = total.pair ? total.gap : 0.0;
  report.witness = total.pair;
  report.pairs_checked = total.count;
  return report;
}

template <SetFunction F>
EpsilonReport exact_epsilon(const F& f, ConstraintClass cls) {
  check_enumeration_size(f.ground_size(), cls);
  return exact_epsilon(to_explicit(f), cls);
}

struct EstimateReport {
  double epsilon = 0.0;
  // Sampled pair with the largest gap, when that gap is positive.
  std::optional<std::pair<Subset, Subset>> witness;
};

// Sampling estimator of eps. Pair i is drawn from its own counter stream:
// two sizes uniform in {1, ..., n-1}, then that many distinct elements each.
template <SetFunction F>
EstimateReport estimate_epsilon_report(const F& f, int n, std::uint64_t num_pairs,
                                       Seed seed) {
  if (n < 2) throw std::invalid_argument("epsilon estimation needs n >= 2");
  if (n != f.ground_size()) throw std::invalid_argument("n does not match f");
  if (num_pairs < 1) throw std::invalid_argument("num_pairs must be >= 1");

  std::vector<int> perm(static_cast<std::size_t>(n));
  auto sample = [&](CounterStream& rng, int k) {
    std::iota(perm.begin(), perm.end(), 0);
    Subset s(n);
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(perm[i], perm[j]);
      s.insert(perm[i]);
    }
    return s;
  };

  EstimateReport report;
  double best = 0.0;
  for (std::uint64_t i = 0; i < num_pairs; ++i) {
    CounterStream rng(seed, i);
    const int n1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int n2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    Subset s = sample(rng, n1);
    Subset t = sample(rng, n2);
    const double g = f(s | t) + f(s & t) - f(s) - f(t);
    if (g > best) {
      best = g;
      report.witness.emplace(std::move(s), std::move(t));
    }
  }
  report.epsilon = best;
  return report;
}

template <SetFunction F>
double estimate_epsilon(const F& f, int n, std::uint64_t num_pairs, Seed seed) {
  return estimate_epsilon_report(f, n, num_pairs, seed).epsilon;
}

// First Cross pair whose gap exceeds tol, in enumeration order.
inline std::optional<ConstraintPair> verify_submodular(const ExplicitFunction& f,
                                                       double tol) {
  const int n = f.ground_size();
  check_enumeration_size(n, ConstraintClass::kCross);
  const Mask outer = detail::outer_count(n);
  for (Mask c = 0; c < outer; ++c) {
    std::optional<ConstraintPair> bad;
    detail::pairs_for_outer(n, ConstraintClass::kCross, c,
                            [&](const ConstraintPair& p) {
                              if (!bad && gap(f, p) > tol) bad = p;
                            });
    if (bad) return bad;
  }
  return std::nullopt;
}

template <SetFunction F>
std::optional<ConstraintPair> verify_submodular(const F& f, double tol) {
  return verify_submodular(to_explicit(f), tol);
}

}  // namespace apxsub
