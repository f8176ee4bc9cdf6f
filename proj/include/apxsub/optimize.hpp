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

// Set-function maximization: exhaustive search, cardinality greedy,
// unconstrained local search and randomized double greedy. All of them take
// any SetFunction and count the queries they issue.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "apxsub/random.hpp"
#include "apxsub/set_function.hpp"
#include "apxsub/subset.hpp"

namespace apxsub {

struct GreedyStep {
  int step;
  int element;
  double value;
  bool operator==(const GreedyStep&) const = default;
};

struct OptResult {
  Subset best_set;
  double best_value = 0.0;
  std::vector<GreedyStep> trajectory;  // greedy only
  std::uint64_t query_count = 0;
};

class MoveLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_n(int n, int ground) {
  if (n != ground) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " does not match the function's ground set (" +
                                std::to_string(ground) + ")");
  }
}

template <SetFunction F, bool kMaximize>
OptResult exhaustive(const F& f, int n) {
  check_n(n, f.ground_size());
  require_dense(n);
  const Mask count = Mask{1} << n;
  OptResult r;
  Mask best = 0;
  double best_value = 0.0;
  for (Mask m = 0; m < count; ++m) {
    double v;
    if constexpr (std::is_same_v<F, ExplicitFunction>) {
      v = f.at(m);
    } else {
      v = f(Subset::from_mask(n, m));
    }
    // Strict comparison keeps the smallest bitmask among ties.
    if (m == 0 || (kMaximize ? v > best_value : v < best_value)) {
      best = m;
      best_value = v;
    }
  }
  r.best_set = Subset::from_mask(n, best);
  r.best_value = best_value;
  r.query_count = count;
  return r;
}

}  // namespace detail

template <SetFunction F>
OptResult exhaustive_max(const F& f, int n) {
  return detail::exhaustive<F, true>(f, n);
}

template <SetFunction F>
OptResult exhaustive_min(const F& f, int n) {
  return detail::exhaustive<F, false>(f, n);
}

// From the empty set, add argmax_x f(S + x) for `budget` steps; the lowest
// index wins ties. The chosen element is added even if it decreases f.
template <SetFunction F>
OptResult greedy(const F& f, int n, int budget) {
  detail::check_n(n, f.ground_size());
  if (budget < 0 || budget > n) throw std::invalid_argument("budget must be in [0, n]");
  OptResult r;
  Subset s(n);
  for (int step = 0; step < budget; ++step) {
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
      if (s.contains(x)) continue;
      const double v = f(s.with(x));
      ++r.query_count;
      if (best == -1 || v > best_value) {
        best = x;
        best_value = v;
      }
    }
    s.insert(best);
    r.trajectory.push_back({step, best, best_value});
  }
  if (budget == 0) {
    r.best_value = f(s);
    ++r.query_count;
  } else {
    r.best_value = r.trajectory.back().value;
  }
  r.best_set = std::move(s);
  return r;
}

// First-improvement local search over single-element additions and
// deletions. Each scan tries additions by ascending index, then deletions by
// ascending index, and takes the first move that improves f by more than
// tau. Returns the better of the local optimum and its complement.
template <SetFunction F>
OptResult local_search(const F& f, int n, double tau, const Subset& start,
                       std::uint64_t max_moves = 1'000'000) {
  detail::check_n(n, f.ground_size());
  check_universe(start, n);
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  OptResult r;
  Subset s = start;
  double value = f(s);
  ++r.query_count;
  std::uint64_t moves = 0;
  for (;;) {
    bool moved = false;
    for (int pass = 0; pass < 2 && !moved; ++pass) {
      const bool adding = pass == 0;
      for (int x = 0; x < n; ++x) {
        if (s.contains(x) == adding) continue;
        Subset candidate = adding ? s.with(x) : s.without(x);
        const double v = f(candidate);
        ++r.query_count;
        if (v > value + tau) {
          s = std::move(candidate);
          value = v;
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
    if (++moves >= max_moves) {
      throw MoveLimitError("local search hit the move cap of " +
                           std::to_string(max_moves));
    }
  }
  Subset other = s.complement();
  const double other_value = f(other);
  ++r.query_count;
  if (other_value > value) {
    r.best_set = std::move(other);
    r.best_value = other_value;
  } else {
    r.best_set = std::move(s);
    r.best_value = value;
  }
  return r;
}

template <SetFunction F>
OptResult local_search(const F& f, int n, double tau = 0.0) {
  return local_search(f, n, tau, Subset(n));
}

// Randomized double greedy. X grows from {} and Y shrinks from [n]; element
// i joins X with probability a+/(a+ + b+), where a = f(X+i) - f(X) and
// b = f(Y-i) - f(Y). When a+ = b+ = 0 the element joins X. The coin for
// element i is the i-th draw of the (seed, 0) stream.
template <SetFunction F>
OptResult rdg(const F& f, int n, Seed seed) {
  detail::check_n(n, f.ground_size());
  OptResult r;
  Subset x(n);
  Subset y = Subset::full(n);
  double fx = f(x);
  double fy = f(y);
  r.query_count = 2;
  CounterStream rng(seed, 0);
  for (int i = 0; i < n; ++i) {
    Subset x_add = x.with(i);
    Subset y_del = y.without(i);
    const double fx_add = f(x_add);
    const double fy_del = f(y_del);
    r.query_count += 2;
    const double a = std::max(0.0, fx_add - fx);
    const double b = std::max(0.0, fy_del - fy);
    const double u = rng.uniform();
    const bool add = (a + b == 0.0) || u < a / (a + b);
    if (add) {
      x = std::move(x_add);
      fx = fx_add;
    } else {
      y = std::move(y_del);
      fy = fy_del;
    }
  }
  r.best_value = fx;
  r.best_set = std::move(x);
  return r;
}

}  // namespace apxsub
