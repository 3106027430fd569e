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

#include <cmath>
#include <string>
#include <utility>

#include "hoa/error.h"

namespace hoa::pipeline {
namespace {

constexpr double kTimeEpsilon = 1e-9;

}  // namespace

BandwidthEstimator::BandwidthEstimator(double window_s, double hop_s,
                                       double origin_s,
                                       std::size_t history_capacity)
    : window_(window_s),
      hop_(hop_s > 0.0 ? hop_s : window_s),
      origin_(origin_s),
      history_capacity_(history_capacity) {
  if (!(window_ > 0.0) || !std::isfinite(window_)) {
    throw DomainError("bandwidth window must be positive");
  }
  if (!(hop_ > 0.0) || hop_ > window_ + kTimeEpsilon) {
    throw DomainError("bandwidth hop must lie in (0, window]");
  }
}

double BandwidthEstimator::boundary(long long k) const {
  return origin_ + window_ + static_cast<double>(k) * hop_;
}

void BandwidthEstimator::publish_until(double now) {
  if (last_time_ && now < *last_time_) {
    throw ClockRegressionError("bandwidth estimator clock went from " +
                               std::to_string(*last_time_) + " to " +
                               std::to_string(now));
  }
  last_time_ = now;
  while (boundary(next_boundary_) <= now + kTimeEpsilon) {
    const double end = boundary(next_boundary_);
    const double start = end - window_;
    double bits = 0.0;
    for (const Event& e : events_) {
      if (e.time >= start - kTimeEpsilon && e.time < end - kTimeEpsilon) {
        bits += e.bits;
      }
    }
    estimate_ = bits / window_;
    const EstimateSample sample{end, *estimate_};
    history_.push_back(sample);
    if (history_.size() > history_capacity_) history_.pop_front();
    published_.push_back(sample);
    ++next_boundary_;
    // Drop events that no later window can contain.
    const double next_start = boundary(next_boundary_) - window_;
    while (!events_.empty() && events_.front().time < next_start - kTimeEpsilon) {
      events_.pop_front();
    }
  }
}

void BandwidthEstimator::update(double bits, double now) {
  if (!(bits >= 0.0)) throw DomainError("bandwidth update with negative bits");
  publish_until(now);
  events_.push_back({now, bits});
}

void BandwidthEstimator::advance(double now) { publish_until(now); }

double BandwidthEstimator::pending_bits() const {
  const double start = boundary(next_boundary_) - window_;
  double bits = 0.0;
  for (const Event& e : events_) {
    if (e.time >= start - kTimeEpsilon) bits += e.bits;
  }
  return bits;
}

std::vector<EstimateSample> BandwidthEstimator::take_published() {
  return std::exchange(published_, {});
}

}  // namespace hoa::pipeline
