// Copyright 2026 The qrecycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrecycle/random.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace qrecycle {
namespace {

// Random123 known-answer vectors for philox4x32_10.
TEST(Philox, KnownAnswerVectors) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(RandomStream, FirstWordsComeFromBlockZero) {
  RandomStream rng(0, 0);
  // Block 0 of key 0 is the all-zero known-answer vector, low word first.
  EXPECT_EQ(rng.next_u64(), 0xe169c58d6627e8d5ULL);
  EXPECT_EQ(rng.next_u64(), 0x9b00dbd8bc57ac4cULL);
  EXPECT_EQ(rng.position(), 2u);
}

TEST(RandomStream, SameSeedAndStreamReproduce) {
  RandomStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomStream, CopyForksTheSequence) {
  RandomStream a(9, 1);
  a.next_u64();
  RandomStream b = a;
  EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(a.uniform(), b.uniform());
}

TEST(RandomStream, DistinctStreamsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 1000; ++s) firsts.insert(RandomStream(42, s).next_u64());
  EXPECT_EQ(firsts.size(), 1000u);
}

TEST(RandomStream, DistinctStreamsAreUncorrelated) {
  RandomStream a(42, 1), b(42, 2);
  constexpr int n = 200000;
  double sab = 0, sa = 0, sb = 0, saa = 0, sbb = 0;
  for (int i = 0; i < n; ++i) {
    const double x = a.uniform(), y = b.uniform();
    sa += x; sb += y; sab += x * y; saa += x * x; sbb += y * y;
  }
  const double cov = sab / n - (sa / n) * (sb / n);
  const double corr = cov / std::sqrt((saa / n - sa * sa / n / n) * (sbb / n - sb * sb / n / n));
  // Null sd of the correlation is 1/sqrt(n) ~ 0.0022.
  EXPECT_LT(std::abs(corr), 4.0 / std::sqrt(n));
}

TEST(RandomStream, UniformRangesAndMoments) {
  RandomStream rng(123, 0);
  double sum = 0.0;
  constexpr int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = rng.uniform_open_closed();
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
    sum += u;
  }
  // sd of the mean of U(0,1) is 1/sqrt(12 n).
  EXPECT_NEAR(sum / n, 0.5, 4.0 / std::sqrt(12.0 * n));
}

TEST(Mix64, IsABijectionOnSamples) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(mix64(i));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_NE(mix64(0), 0u);
}

}  // namespace
}  // namespace qrecycle
