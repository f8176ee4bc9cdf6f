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
#include <set>

#include "support.hpp"

namespace apxsub {
namespace {

WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

TEST(Exhaustive, TriangleCut) {
  const auto r = exhaustive_max(CutFunction(triangle()), 3);
  EXPECT_EQ(r.best_value, 2.0);
  EXPECT_EQ(r.best_set.mask(), 0b001U);
  EXPECT_EQ(r.query_count, 8U);
}

TEST(Exhaustive, ModularAndTies) {
  const auto r = exhaustive_max(ModularFunction({1.0, -1.0}), 2);
  EXPECT_EQ(r.best_set, Subset(2, {0}));
  EXPECT_EQ(r.best_value, 1.0);
  EXPECT_TRUE(exhaustive_max(ModularFunction({0, 0, 0}, 2.0), 3).best_set.empty());
  const auto lo = exhaustive_min(ModularFunction({1.0, -1.0}), 2);
  EXPECT_EQ(lo.best_set, Subset(2, {1}));
  EXPECT_EQ(lo.best_value, -1.0);
}

TEST(Exhaustive, Errors) {
  EXPECT_THROW(exhaustive_max(ModularFunction({1.0, 2.0}), 3), std::invalid_argument);
  EXPECT_THROW(exhaustive_max(ModularFunction(std::vector<double>(26, 1.0)), 26),
               SizeLimitError);
}

TEST(Greedy, ModularPicksLargest) {
  const auto r = greedy(ModularFunction({3.0, 1.0, 2.0}), 3, 2);
  ASSERT_EQ(r.trajectory.size(), 2U);
  EXPECT_EQ(r.trajectory[0].element, 0);
  EXPECT_EQ(r.trajectory[1].element, 2);
  EXPECT_EQ(r.best_value, 5.0);
}

TEST(Greedy, BudgetZeroAndErrors) {
  const auto r = greedy(ModularFunction({3.0, 1.0}), 2, 0);
  EXPECT_TRUE(r.best_set.empty());
  EXPECT_TRUE(r.trajectory.empty());
  EXPECT_THROW(greedy(ModularFunction({3.0, 1.0}), 2, 3), std::invalid_argument);
  EXPECT_THROW(greedy(ModularFunction({3.0, 1.0}), 2, -1), std::invalid_argument);
}

TEST(Greedy, LowestIndexWinsTies) {
  const auto r = greedy(ModularFunction({1.0, 1.0, 1.0}), 3, 3);
  EXPECT_EQ(r.trajectory[0].element, 0);
  EXPECT_EQ(r.trajectory[1].element, 1);
  EXPECT_EQ(r.trajectory[2].element, 2);
}

TEST(Greedy, FilterInvariance) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 11;
    // Integer-valued tables make ties common, which exercises tie-breaking.
    std::vector<double> t(std::size_t{1} << n);
    for (double& v : t) v = std::floor(u(rng));
    const ExplicitFunction f(n, std::move(t));
    const double eps = u(rng);
    const int budget = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const auto a = greedy(f, n, budget);
    const auto b = greedy(filter_function(f, eps), n, budget);
    ASSERT_EQ(a.trajectory.size(), b.trajectory.size());
    for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
      EXPECT_EQ(a.trajectory[i].element, b.trajectory[i].element);
      EXPECT_NEAR(b.trajectory[i].value - a.trajectory[i].value,
                  filter_offset(n, eps, static_cast<int>(i) + 1), 1e-9);
    }
  }
}

TEST(LocalSearch, SingleEdge) {
  const auto r = local_search(CutFunction(WeightedGraph(2, {{0, 1, 1.0}})), 2, 0.0, Subset(2));
  EXPECT_EQ(r.best_value, 1.0);
}

TEST(LocalSearch, Modular) {
  const auto r = local_search(ModularFunction({1.0, -1.0}), 2);
  EXPECT_EQ(r.best_set, Subset(2, {0}));
  EXPECT_EQ(r.best_value, 1.0);
}

bool is_local_optimum(const ExplicitFunction& f, const Subset& s, double tau) {
  const double v = f(s);
  for (int x = 0; x < f.ground_size(); ++x) {
    const Subset t = s.contains(x) ? s.without(x) : s.with(x);
    if (f(t) > v + tau) return false;
  }
  return true;
}

TEST(LocalSearch, PostconditionByDirectScan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 8;
    const ExplicitFunction f = testing::random_table(n, 5.0, rng);
    const double tau = (trial % 3) * 0.1;
    const auto r = local_search(f, n, tau);
    // Either S* or its complement was returned; the local optimum is one of them.
    const Subset other = r.best_set.complement();
    EXPECT_TRUE(is_local_optimum(f, r.best_set, tau) || is_local_optimum(f, other, tau));
    EXPECT_GE(r.best_value, f(other));
    EXPECT_EQ(r.best_value, f(r.best_set));
  }
}

TEST(LocalSearch, CutsReachHalfOfOptimum) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const CutFunction f(gen_er(10, 0.5, rng()));
    const double opt = exhaustive_max(f, 10).best_value;
    EXPECT_GE(local_search(f, 10).best_value, 0.5 * opt - 1e-12);
  }
}

TEST(LocalSearch, MoveLimit) {
  const ModularFunction f(std::vector<double>(6, 1.0));
  EXPECT_THROW(local_search(f, 6, 0.0, Subset(6), 2), MoveLimitError);
  EXPECT_THROW(local_search(f, 6, -1.0), std::invalid_argument);
  EXPECT_THROW(local_search(f, 6, 0.0, Subset(5)), std::out_of_range);
}

TEST(Rdg, ModularCases) {
  for (Seed s = 0; s < 20; ++s) {
    const auto a = rdg(ModularFunction({1.0, 2.0}), 2, s);
    EXPECT_EQ(a.best_set, Subset(2, {0, 1}));
    EXPECT_EQ(a.best_value, 3.0);
    const auto b = rdg(ModularFunction({1.0, -1.0}), 2, s);
    EXPECT_EQ(b.best_set, Subset(2, {0}));
    EXPECT_EQ(b.best_value, 1.0);
  }
}

TEST(Rdg, DeterministicPerSeed) {
  const CutFunction f(gen_er(12, 0.5, 3));
  const auto a = rdg(f, 12, 77);
  const auto b = rdg(f, 12, 77);
  EXPECT_EQ(a.best_set, b.best_set);
  EXPECT_EQ(a.query_count, 2U + 2U * 12U);
  std::set<Mask> outcomes;
  for (Seed s = 0; s < 30; ++s) outcomes.insert(rdg(f, 12, s).best_set.mask());
  EXPECT_GT(outcomes.size(), 1U);
}

TEST(Rdg, HalfOfOptimumOnAverage) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const ExplicitFunction f = testing::random_submodular(8, rng);
    const double opt = exhaustive_max(f, 8).best_value;
    double sum = 0.0;
    for (Seed s = 0; s < 500; ++s) sum += rdg(f, 8, s).best_value;
    EXPECT_GE(sum / 500.0, 0.45 * opt);
  }
}

TEST(Optimizers, SparseGroundSet) {
  const auto f = noisy_function(CutFunction(gen_er(40, 0.3, 1)), NoiseModel::gaussian(2.0, 1));
  const auto ls = local_search(f, 40);
  EXPECT_TRUE(std::isfinite(ls.best_value));
  const auto rd = rdg(f, 40, 5);
  EXPECT_EQ(rd.best_value, f(rd.best_set));
  const auto gr = greedy(f, 40, 5);
  EXPECT_EQ(gr.best_set.size(), 5);
}

}  // namespace
}  // namespace apxsub
