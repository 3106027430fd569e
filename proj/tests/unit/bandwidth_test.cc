// Copyright 2026 The hoa-adapt Authors
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

#include "hoa/pipeline/bandwidth.h"

#include <gtest/gtest.h>

#include "hoa/error.h"

namespace hoa::pipeline {
namespace {

TEST(BandwidthEstimator, BitsOverWindow) {
  BandwidthEstimator est(1.0);
  EXPECT_FALSE(est.estimate().has_value());
  est.update(1e6, 0.2);
  est.update(1e6, 0.7);
  EXPECT_DOUBLE_EQ(est.pending_bits(), 2e6);
  est.advance(1.0);
  ASSERT_TRUE(est.estimate().has_value());
  EXPECT_DOUBLE_EQ(*est.estimate(), 2e6);
}

TEST(BandwidthEstimator, EmptyWindowIsZero) {
  BandwidthEstimator est(0.5);
  est.advance(0.5);
  EXPECT_DOUBLE_EQ(*est.estimate(), 0.0);
}

TEST(BandwidthEstimator, HandSummedPackets) {
  BandwidthEstimator est(0.1);
  double oracle = 0.0;
  for (int i = 0; i < 250; ++i) {
    est.update(8192.0, i * 0.0004);
    oracle += 8192.0;
  }
  est.advance(0.1);
  EXPECT_NEAR(*est.estimate(), oracle / 0.1, 1e-6);
  EXPECT_NEAR(*est.estimate(), 20.48e6, 1e-6);
}

TEST(BandwidthEstimator, TumblingWindowsReset) {
  BandwidthEstimator est(0.1);
  est.update(1000.0, 0.05);
  est.update(500.0, 0.15);
  est.advance(0.3);
  const auto published = est.take_published();
  ASSERT_EQ(published.size(), 3u);
  EXPECT_DOUBLE_EQ(published[0].bps, 10000.0);
  EXPECT_DOUBLE_EQ(published[1].bps, 5000.0);
  EXPECT_DOUBLE_EQ(published[2].bps, 0.0);
  EXPECT_NEAR(published[2].time, 0.3, 1e-12);
  EXPECT_TRUE(est.take_published().empty());
}

TEST(BandwidthEstimator, SlidingWindowOverlaps) {
  BandwidthEstimator est(0.1, 0.025);
  // 0.1 s windows advancing by 0.025 s.
  est.update(800.0, 0.01);
  est.update(800.0, 0.09);
  est.advance(0.175);
  const auto p = est.take_published();
  ASSERT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p[0].bps, 16000.0);  // [0, 0.1)
  EXPECT_DOUBLE_EQ(p[1].bps, 8000.0);   // [0.025, 0.125)
  EXPECT_DOUBLE_EQ(p[2].bps, 8000.0);   // [0.05, 0.15)
  EXPECT_DOUBLE_EQ(p[3].bps, 8000.0);   // [0.075, 0.175)
  est.advance(0.2);
  EXPECT_DOUBLE_EQ(*est.estimate(), 0.0);  // [0.1, 0.2)
}

TEST(BandwidthEstimator, BoundaryEpsilon) {
  BandwidthEstimator est(0.1);
  est.update(100.0, 0.1 - 1e-12);  // on the boundary: belongs to the next window
  est.advance(0.1);
  EXPECT_DOUBLE_EQ(*est.estimate(), 0.0);
  est.advance(0.2);
  EXPECT_DOUBLE_EQ(*est.estimate(), 1000.0);
}

TEST(BandwidthEstimator, HistoryIsBounded) {
  BandwidthEstimator est(0.01, 0.0, 0.0, 5);
  est.advance(1.0);
  EXPECT_EQ(est.history().size(), 5u);
  EXPECT_NEAR(est.history().back().time, 1.0, 1e-9);
}

TEST(BandwidthEstimator, Errors) {
  EXPECT_THROW(BandwidthEstimator(0.0), DomainError);
  EXPECT_THROW(BandwidthEstimator(0.1, 0.2), DomainError);
  BandwidthEstimator est(0.1);
  est.update(1.0, 0.5);
  EXPECT_THROW(est.update(1.0, 0.4), ClockRegressionError);
}

}  // namespace
}  // namespace hoa::pipeline
