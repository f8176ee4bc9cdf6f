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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace apxsub {
namespace {

TEST(FilterValue, ZeroFunctionOffsets) {
  const ModularFunction zero(std::vector<double>(4, 0.0));
  EXPECT_EQ(filter_value(zero, 1.0, Subset(4, {0, 1})), 1.0);
  EXPECT_EQ(filter_value(zero, 1.0, Subset(4)), -1.0);
}

TEST(FilterValue, LbcrossBecomesConstant) {
  for (int n = 1; n <= 8; ++n) {
    const auto f = make_lbcross(n);
    const double constant = static_cast<double>((n * n + 1) / 2) / 8.0;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      EXPECT_DOUBLE_EQ(filter_value(f, 1.0, Subset::from_mask(n, m)), constant)
          << "n=" << n << " mask=" << m;
    }
  }
}

TEST(FilterFunction, ZeroEpsIsIdentity) {
  std::mt19937_64 rng(4);
  const ExplicitFunction f = testing::random_table(5, 2.0, rng);
  const auto g = filter_function(f, 0.0);
  for (Mask m = 0; m < 32; ++m) EXPECT_EQ(g(Subset::from_mask(5, m)), f.at(m));
}

TEST(FilterFunction, SquaredWithEpsTwoIsSubmodular) {
  const CardinalityFunction f(3, [](int k) { return static_cast<double>(k) * k; });
  EXPECT_FALSE(verify_submodular(filter_function(f, 2.0), 1e-9));
}

TEST(FilterFunction, SubmodularStaysSubmodular) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const ExplicitFunction f = testing::random_submodular(6, rng);
    for (double eps : {0.0, 0.3, 5.0}) {
      EXPECT_FALSE(verify_submodular(filter_function(f, eps), 1e-9));
    }
  }
}

// Every cross gap of g is the cross gap of f minus eps, so filtering at the
// exact eps_cross is submodular and filtering below it is not.
TEST(FilterFunction, ExactEpsIsTheThreshold) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    const ExplicitFunction f = testing::random_perturbed(n, 0.4, rng);
    const auto rep = exact_epsilon(f, ConstraintClass::kCross);
    const double e = rep.epsilon;
    EXPECT_FALSE(verify_submodular(filter_function(f, e), 1e-9));
    if (e > 1e-6) {
      const auto g = to_explicit(filter_function(f, e * (1.0 - 1e-3)));
      EXPECT_TRUE(verify_submodular(g, 1e-12));
      EXPECT_NEAR(gap(g, *rep.witness), e * 1e-3, 1e-9);
    }
  }
}

TEST(FilterFunction, CrossGapShiftsByEps) {
  std::mt19937_64 rng(8);
  const ExplicitFunction f = testing::random_table(6, 1.0, rng);
  const ExplicitFunction g = to_explicit(filter_function(f, 0.7));
  for_each_pair(6, ConstraintClass::kCross, [&](const ConstraintPair& p) {
    EXPECT_NEAR(gap(g, p), gap(f, p) - 0.7, 1e-12);
  });
}

TEST(DistanceBound, Values) {
  EXPECT_EQ(distance_bound(4, 1.0), 1.0);
  EXPECT_EQ(distance_bound(3, 1.0), 0.5);
  for (int n = 1; n < 20; ++n) EXPECT_EQ(distance_bound(n, 0.0), 0.0);
  EXPECT_THROW(distance_bound(3, -1.0), std::invalid_argument);
  EXPECT_THROW(filter_value(ModularFunction({1.0}), -0.1, Subset(1)), std::invalid_argument);
  EXPECT_THROW(filter_function(ModularFunction({1.0}), -0.1), std::invalid_argument);
}

// max_S |g(S) - f(S)| is attained at |S| in {0, n} and equals the bound for
// every n.
TEST(DistanceBound, AttainedByOffsets) {
  for (int n = 1; n <= 30; ++n) {
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double off = filter_offset(n, 1.5, k);
      EXPECT_LE(std::abs(off), distance_bound(n, 1.5) + 1e-12);
      worst = std::max(worst, std::abs(off));
    }
    EXPECT_DOUBLE_EQ(worst, distance_bound(n, 1.5)) << "n=" << n;
  }
}

TEST(FilterFunction, WorksInSparseRegime) {
  const ModularFunction f(std::vector<double>(40, 1.0));
  const auto g = filter_function(f, 2.0);
  const Subset s = Subset::from_indices(40, {1, 2, 3});
  EXPECT_DOUBLE_EQ(g(s), 3.0 + 2.0 * (800.0 - 34.0 * 34.0) / 8.0);
}

}  // namespace
}  // namespace apxsub
