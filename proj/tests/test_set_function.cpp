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

#include <sstream>

#include "apxsub/graph.hpp"
#include "apxsub/set_function.hpp"

namespace apxsub {
namespace {

WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

TEST(ExplicitFunction, TableLookup) {
  const ExplicitFunction f(2, {0, 1, 1, 2});
  EXPECT_EQ(f(Subset(2, {0, 1})), 2.0);
  EXPECT_EQ(f(Subset(2, {0, 1})), f(Subset(2, {0, 1})));
}

TEST(ExplicitFunction, RejectsBadShapes) {
  EXPECT_THROW(ExplicitFunction(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(ExplicitFunction(0, {0}), std::invalid_argument);
  EXPECT_THROW(ExplicitFunction(26, {}), SizeLimitError);
  const ExplicitFunction f(2, {0, 1, 1, 2});
  EXPECT_THROW(f(Subset(3)), std::out_of_range);
}

TEST(ModularFunction, SumOfWeights) {
  const ModularFunction f({1.0, -1.0});
  EXPECT_EQ(f(Subset(2, {1})), -1.0);
  EXPECT_EQ(f(Subset(2, {0, 1})), 0.0);
  const ModularFunction g({1.0, 2.0}, 3.0);
  EXPECT_EQ(g(Subset(2)), 3.0);
}

TEST(CutValue, Triangle) {
  const auto g = triangle();
  EXPECT_EQ(cut_value(g, Subset(3, {0})), 2.0);
  EXPECT_EQ(cut_value(g, Subset(3)), 0.0);
}

TEST(CutValue, SignedPath) {
  const WeightedGraph g(3, {{0, 1, 3.0}, {1, 2, -2.0}});
  EXPECT_EQ(cut_value(g, Subset(3, {1})), 1.0);
}

TEST(CutValue, ComplementSymmetry) {
  const WeightedGraph g(5, {{0, 1, 0.5}, {1, 3, 2.0}, {2, 4, -1.5}, {0, 4, 1.0}});
  for (Mask m = 0; m < 32; ++m) {
    const Subset s = Subset::from_mask(5, m);
    EXPECT_EQ(cut_value(g, s), cut_value(g, s.complement()));
  }
}

TEST(ToExplicit, TriangleCutTable) {
  // Hand enumeration: only {} and {0,1,2} cut nothing.
  const auto t = to_explicit(CutFunction(triangle())).table();
  EXPECT_EQ(t, (std::vector<double>{0, 2, 2, 2, 2, 2, 2, 0}));
}

TEST(ToExplicit, SingleElement) {
  const LambdaFunction f(1, [](const Subset& s) { return s.empty() ? 3.5 : -1.25; });
  EXPECT_EQ(to_explicit(f).table(), (std::vector<double>{3.5, -1.25}));
}

TEST(ToExplicit, AgreesWithSource) {
  const ModularFunction f({0.3, -2.0, 1.5, 4.0}, 0.25);
  const ExplicitFunction e = to_explicit(f);
  for (Mask m = 0; m < 16; ++m) {
    EXPECT_EQ(e(Subset::from_mask(4, m)), f(Subset::from_mask(4, m)));
  }
}

TEST(AnySetFunction, WrapsAndUnwraps) {
  const AnySetFunction any = ExplicitFunction(2, {1, 2, 3, 4});
  EXPECT_EQ(any.ground_size(), 2);
  EXPECT_EQ(any(Subset(2, {1})), 3.0);
  ASSERT_NE(any.target<ExplicitFunction>(), nullptr);
  EXPECT_EQ(any.target<ModularFunction>(), nullptr);
  EXPECT_EQ(to_explicit(any).table(), (std::vector<double>{1, 2, 3, 4}));
}

TEST(AffineFunction, ScaleAndShift) {
  const AffineFunction<ModularFunction> f(ModularFunction({1.0, 2.0}), 3.0, -1.0);
  EXPECT_EQ(f(Subset(2, {0, 1})), 8.0);
}

TEST(ExplicitIo, RoundTrip) {
  const ExplicitFunction f(3, {0.1, -2, 3.5, 1e-17, 7, 8, 9, 1.0 / 3.0});
  std::stringstream ss;
  write_explicit(ss, f);
  const ExplicitFunction g = read_explicit(ss);
  EXPECT_EQ(f.table(), g.table());
}

TEST(ExplicitIo, Format) {
  std::stringstream ss;
  write_explicit(ss, ExplicitFunction(1, {0.5, 2}));
  EXPECT_EQ(ss.str(), "n 1\n0 0.5\n1 2\n");
}

TEST(ExplicitIo, Errors) {
  std::istringstream missing("n 2\n0 1\n1 2\n2 3\n");
  EXPECT_THROW(read_explicit(missing), std::runtime_error);
  std::istringstream order("n 1\n1 1\n0 2\n");
  EXPECT_THROW(read_explicit(order), std::runtime_error);
  std::istringstream header("x 1\n");
  EXPECT_THROW(read_explicit(header), std::runtime_error);
}

TEST(GraphIo, RoundTrip) {
  const WeightedGraph g(4, {{0, 1, 0.5}, {2, 3, -7.25}});
  std::stringstream ss;
  write_graph(ss, g);
  EXPECT_EQ(ss.str(), "nodes 4\n0 1 0.5\n2 3 -7.25\n");
  EXPECT_EQ(read_graph(ss), g);
}

TEST(WeightedGraph, Validation) {
  EXPECT_THROW(WeightedGraph(2, {{0, 0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), std::out_of_range);
  EXPECT_THROW(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
  std::istringstream bad("nodes 3\n0 1\n");
  EXPECT_THROW(read_graph(bad), std::runtime_error);
}

}  // namespace
}  // namespace apxsub
