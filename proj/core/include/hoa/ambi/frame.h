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

#ifndef HOA_AMBI_FRAME_H_
#define HOA_AMBI_FRAME_H_

#include <cstdint>

#include <Eigen/Core>

#include "hoa/ambi/spherical_harmonics.h"

namespace hoa::ambi {

// One packetized time window of Ambisonics coefficients: a C x L_F matrix
// whose row c is ACN channel c, covering absolute samples
// [start_index, start_index + frame_length).
class AmbisonicFrame {
 public:
  // Throws ShapeError if samples.rows() != (order + 1)^2 or the frame is
  // empty, DomainError on non-finite samples or a non-positive rate.
  AmbisonicFrame(int order, Eigen::MatrixXd samples, double sample_rate,
                 std::int64_t start_index);

  static AmbisonicFrame zeros(int order, int frame_length, double sample_rate,
                              std::int64_t start_index);

  int order() const { return order_; }
  int channel_count() const { return static_cast<int>(samples_.rows()); }
  int frame_length() const { return static_cast<int>(samples_.cols()); }
  double sample_rate() const { return sample_rate_; }
  std::int64_t start_index() const { return start_index_; }

  const Eigen::MatrixXd& samples() const { return samples_; }
  // Callers that write through this must keep the values finite.
  Eigen::MatrixXd& mutable_samples() { return samples_; }

  bool operator==(const AmbisonicFrame& other) const;

 private:
  int order_;
  Eigen::MatrixXd samples_;
  double sample_rate_;
  std::int64_t start_index_;
};

// First (N'+1)^2 rows of `frame`, unchanged. Throws OrderError if
// new_order > frame.order() or new_order < 0.
AmbisonicFrame truncate_order(const AmbisonicFrame& frame, int new_order);

// Zero-extends `frame` to `new_order` >= frame.order().
AmbisonicFrame pad_order(const AmbisonicFrame& frame, int new_order);

// frame - pad(truncate(frame, low_order)): the channels above low_order, with
// the low rows zeroed. Keeps the frame's order.
AmbisonicFrame high_order_residual(const AmbisonicFrame& frame, int low_order);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_FRAME_H_
