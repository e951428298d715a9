/*
 * Copyright 2026 The noisegauge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "noisegauge/rng.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace noisegauge {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(a.StandardNormal(), b.StandardNormal());
    ASSERT_EQ(a.Uniform01(), b.Uniform01());
  }
  Rng c(124);
  Rng d(123);
  EXPECT_NE(c.NextU64(), d.NextU64());
}

TEST(RngTest, Uniform01InHalfOpenUnitInterval) {
  Rng r(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, UniformBelowCoversRangeEvenly) {
  Rng r(2);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const uint64_t v = r.UniformBelow(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  // 10000 expected per bucket, sd ~93.
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_EQ(r.UniformBelow(1), 0u);
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng r(3);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  r.Shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
  std::vector<int> identity(50);
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_NE(v, identity);
}

TEST(RngTest, StandardNormalMoments) {
  Rng r(4);
  const int n = 200000;
  double sum = 0, sum_sq = 0, sum_4 = 0;
  for (int i = 0; i < n; ++i) {
    const double z = r.StandardNormal();
    sum += z;
    sum_sq += z * z;
    sum_4 += z * z * z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 3.0 / std::sqrt(n));
  EXPECT_NEAR(sum_sq / n, 1.0, 3.0 * std::sqrt(2.0 / n));
  // Fourth moment of N(0,1) is 3; sd of the estimate is sqrt(96/n).
  EXPECT_NEAR(sum_4 / n, 3.0, 3.0 * std::sqrt(96.0 / n));
}

}  // namespace
}  // namespace noisegauge
