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

// Submodularity filter.
//
//   g(S) = f(S) + eps * ( ceil(n^2/2) / 8 - (|S| - n/2)^2 / 2 )
//        = f(S) + eps * ( ceil(n^2/2) - (2|S| - n)^2 ) / 8
//
// The added term is concave in |S| with second difference exactly -eps, so
// every Cross gap of g is the Cross gap of f minus eps. If f is
// eps-approximately Cross-submodular, g is submodular, and
// |g(S) - f(S)| <= eps * floor(n^2/2) / 8 for all S.
//
// g is a lazy wrapper: every query to g issues exactly one query to f.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "apxsub/set_function.hpp"
#include "apxsub/subset.hpp"

namespace apxsub {

// Offset g(S) - f(S) for a set of the given cardinality.
inline double filter_offset(int n, double eps, int cardinality) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  const std::int64_t nn = n;
  const std::int64_t ceil_half = (nn * nn + 1) / 2;
  const std::int64_t d = 2 * std::int64_t{cardinality} - nn;
  return eps * static_cast<double>(ceil_half - d * d) / 8.0;
}

// eps * floor(n^2/2) / 8.
inline double distance_bound(int n, double eps) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  const std::int64_t nn = n;
  return eps * static_cast<double>((nn * nn) / 2) / 8.0;
}

template <SetFunction F>
class FilteredFunction {
 public:
  FilteredFunction(F base, double eps) : base_(std::move(base)), eps_(eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  }

  int ground_size() const { return base_.ground_size(); }
  double operator()(const Subset& s) const {
    return base_(s) + filter_offset(ground_size(), eps_, s.size());
  }
  double eps() const { return eps_; }
  const F& base() const { return base_; }

 private:
  F base_;
  double eps_;
};

template <SetFunction F>
FilteredFunction<F> filter_function(F f, double eps) {
  return FilteredFunction<F>(std::move(f), eps);
}

template <SetFunction F>
double filter_value(const F& f, double eps, const Subset& s) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  return f(s) + filter_offset(f.ground_size(), eps, s.size());
}

}  // namespace apxsub
