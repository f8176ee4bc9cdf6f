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

#include <cmath>
#include <set>

#include "apxsub/random.hpp"

namespace apxsub {
namespace {

// Published known-answer vectors for Philox4x32 with 10 rounds.
TEST(Philox, KnownAnswerZero) {
  const auto r = Philox4x32::apply({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(r, (Philox4x32::Counter{0x6627e8d5U, 0xe169c58dU, 0xbc57ac4cU, 0x9b00dbd8U}));
}

TEST(Philox, KnownAnswerAllOnes) {
  const auto r = Philox4x32::apply({0xffffffffU, 0xffffffffU, 0xffffffffU, 0xffffffffU},
                                   {0xffffffffU, 0xffffffffU});
  EXPECT_EQ(r, (Philox4x32::Counter{0x408f276dU, 0x41c83b0eU, 0xa20bc7c6U, 0x6d5451fdU}));
}

TEST(Philox, KnownAnswerPiDigits) {
  const auto r = Philox4x32::apply({0x243f6a88U, 0x85a308d3U, 0x13198a2eU, 0x03707344U},
                                   {0xa4093822U, 0x299f31d0U});
  EXPECT_EQ(r, (Philox4x32::Counter{0xd16cfe09U, 0x94fdccebU, 0x5001e420U, 0x24126ea1U}));
}

TEST(Philox, WordsPackCounterAndKey) {
  const auto w = philox_words(0, 0, 0);
  EXPECT_EQ(w[0], 0xe169c58d6627e8d5ULL);
  EXPECT_EQ(w[1], 0x9b00dbd8bc57ac4cULL);
}

TEST(Mix64, SplitMixReference) {
  // First output of SplitMix64 seeded with 0.
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
}

TEST(DeriveSeed, DistinctLabels) {
  std::set<Seed> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(derive_seed(42, t));
  EXPECT_EQ(seen.size(), 1000U);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(ToUnit, Range) {
  EXPECT_EQ(to_unit(0), 0.0);
  EXPECT_LT(to_unit(~std::uint64_t{0}), 1.0);
  EXPECT_EQ(to_unit(std::uint64_t{1} << 63), 0.5);
}

TEST(CounterStream, IndexAddressable) {
  CounterStream a(7, 3);
  const auto w0 = philox_words(7, 3, 0);
  const auto w1 = philox_words(7, 3, 1);
  EXPECT_EQ(a.next_u64(), w0[0]);
  EXPECT_EQ(a.next_u64(), w0[1]);
  EXPECT_EQ(a.next_u64(), w1[0]);
  EXPECT_EQ(a.draws(), 2U);
}

TEST(CounterStream, BelowIsInRangeAndCoversValues) {
  CounterStream s(11, 0);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = s.below(7);
    ASSERT_LT(v, 7U);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(s.below(0), std::invalid_argument);
  EXPECT_EQ(s.below(1), 0U);
}

TEST(CounterStream, NormalMoments) {
  CounterStream s(5, 9);
  const int count = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const double x = s.normal();
    ASSERT_TRUE(std::isfinite(x));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  // 5 standard errors.
  EXPECT_NEAR(mean, 0.0, 5.0 / std::sqrt(count));
  EXPECT_NEAR(var, 1.0, 5.0 * std::sqrt(2.0 / count));
}

TEST(CounterStream, UniformMean) {
  CounterStream s(99, 1);
  double sum = 0.0;
  const int count = 100000;
  for (int i = 0; i < count; ++i) sum += s.uniform();
  EXPECT_NEAR(sum / count, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / count));
}

}  // namespace
}  // namespace apxsub
