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

#include "hoa/ambi/frame.h"

#include <string>
#include <utility>

#include "hoa/error.h"

namespace hoa::ambi {

AmbisonicFrame::AmbisonicFrame(int order, Eigen::MatrixXd samples,
                               double sample_rate, std::int64_t start_index)
    : order_(order),
      samples_(std::move(samples)),
      sample_rate_(sample_rate),
      start_index_(start_index) {
  if (order_ < 0 || order_ > kMaxSupportedOrder) {
    throw OrderError("AmbisonicFrame: order " + std::to_string(order_) +
                     " out of range");
  }
  if (samples_.rows() != ambi::channel_count(order_)) {
    throw ShapeError("AmbisonicFrame: " + std::to_string(samples_.rows()) +
                     " rows for order " + std::to_string(order_) +
                     ", expected " + std::to_string(ambi::channel_count(order_)));
  }
  if (samples_.cols() < 1) throw ShapeError("AmbisonicFrame: empty frame");
  if (!(sample_rate_ > 0.0)) {
    throw DomainError("AmbisonicFrame: sample rate must be positive");
  }
  if (!samples_.allFinite()) {
    throw DomainError("AmbisonicFrame: non-finite sample");
  }
}

AmbisonicFrame AmbisonicFrame::zeros(int order, int frame_length,
                                     double sample_rate,
                                     std::int64_t start_index) {
  if (order < 0 || order > kMaxSupportedOrder) {
    throw OrderError("AmbisonicFrame::zeros: order out of range");
  }
  return AmbisonicFrame(
      order, Eigen::MatrixXd::Zero(ambi::channel_count(order), frame_length),
      sample_rate, start_index);
}

bool AmbisonicFrame::operator==(const AmbisonicFrame& other) const {
  return order_ == other.order_ && sample_rate_ == other.sample_rate_ &&
         start_index_ == other.start_index_ &&
         samples_.rows() == other.samples_.rows() &&
         samples_.cols() == other.samples_.cols() &&
         samples_ == other.samples_;
}

AmbisonicFrame truncate_order(const AmbisonicFrame& frame, int new_order) {
  if (new_order < 0 || new_order > frame.order()) {
    throw OrderError("truncate_order: cannot truncate order " +
                     std::to_string(frame.order()) + " to " +
                     std::to_string(new_order));
  }
  return AmbisonicFrame(new_order,
                        frame.samples().topRows(channel_count(new_order)),
                        frame.sample_rate(), frame.start_index());
}

AmbisonicFrame pad_order(const AmbisonicFrame& frame, int new_order) {
  if (new_order < frame.order() || new_order > kMaxSupportedOrder) {
    throw OrderError("pad_order: cannot pad order " +
                     std::to_string(frame.order()) + " to " +
                     std::to_string(new_order));
  }
  Eigen::MatrixXd padded =
      Eigen::MatrixXd::Zero(channel_count(new_order), frame.frame_length());
  padded.topRows(frame.channel_count()) = frame.samples();
  return AmbisonicFrame(new_order, std::move(padded), frame.sample_rate(),
                        frame.start_index());
}

AmbisonicFrame high_order_residual(const AmbisonicFrame& frame,
                                   int low_order) {
  if (low_order < 0 || low_order > frame.order()) {
    throw OrderError("high_order_residual: low order " +
                     std::to_string(low_order) + " not in [0, " +
                     std::to_string(frame.order()) + "]");
  }
  Eigen::MatrixXd residual = frame.samples();
  residual.topRows(channel_count(low_order)).setZero();
  return AmbisonicFrame(frame.order(), std::move(residual),
                        frame.sample_rate(), frame.start_index());
}

}  // namespace hoa::ambi
