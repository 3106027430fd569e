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

#ifndef HOA_PIPELINE_BANDWIDTH_H_
#define HOA_PIPELINE_BANDWIDTH_H_

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

namespace hoa::pipeline {

struct EstimateSample {
  double time = 0.0;  // window end
  double bps = 0.0;
};

// C_A = L_R / T_R over windows [b - T_R, b) ending at boundaries
// b = origin + T_R + k * hop. With hop == T_R (the default) windows tumble and
// the accumulator resets at every boundary; a smaller hop gives a sliding
// window that publishes more often.
//
// Times within 1 ns of a boundary count as on it.
class BandwidthEstimator {
 public:
  // Throws DomainError unless 0 < hop <= window.
  explicit BandwidthEstimator(double window_s, double hop_s = 0.0,
                              double origin_s = 0.0,
                              std::size_t history_capacity = 256);

  // Publishes every boundary at or before `now`, then records `bits` at
  // `now`. Throws ClockRegressionError if `now` precedes the previous call.
  void update(double bits, double now);
  // Publishes boundaries up to `now` without recording bits.
  void advance(double now);

  double window() const { return window_; }
  double hop() const { return hop_; }

  // Estimate from the last completed window; empty before the first one.
  std::optional<double> estimate() const { return estimate_; }
  // Bits recorded in the window currently being filled.
  double pending_bits() const;

  // Ring of the most recent published estimates, oldest first.
  const std::deque<EstimateSample>& history() const { return history_; }
  // Estimates published since the previous call.
  std::vector<EstimateSample> take_published();

 private:
  struct Event {
    double time;
    double bits;
  };

  double boundary(long long k) const;
  void publish_until(double now);

  double window_;
  double hop_;
  double origin_;
  std::size_t history_capacity_;
  long long next_boundary_ = 0;
  std::optional<double> last_time_;
  std::optional<double> estimate_;
  std::deque<Event> events_;
  std::deque<EstimateSample> history_;
  std::vector<EstimateSample> published_;
};

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_BANDWIDTH_H_
