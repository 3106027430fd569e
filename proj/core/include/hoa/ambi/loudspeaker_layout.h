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

#ifndef HOA_AMBI_LOUDSPEAKER_LAYOUT_H_
#define HOA_AMBI_LOUDSPEAKER_LAYOUT_H_

#include <vector>

#include <Eigen/Core>

#include "hoa/ambi/direction.h"
#include "hoa/ambi/frame.h"

namespace hoa::ambi {

// S x C matrix of harmonics sampled at the given directions, row s holding
// Y_c(d_s) in ACN order.
Eigen::MatrixXd sh_sampling_matrix(const std::vector<Direction>& directions,
                                   int order);

// A virtual loudspeaker rig with a mode-matching decoder. With Y the S x C
// sampling matrix, the S x C decode matrix is D = pinv(Y^T), so re-encoding
// the decoded feeds gives back the coefficients: Y^T D = I (C x C).
class LoudspeakerLayout {
 public:
  static constexpr double kInverseTolerance = 1e-6;

  // Throws ConfigError if S < C or the sampling matrix is rank deficient
  // (the pseudo-inverse check fails).
  LoudspeakerLayout(std::vector<Direction> directions, int order);

  // The 36-point equal-weight design at order 3 (or the matching design for
  // other orders up to 4).
  static LoudspeakerLayout builtin(int order);

  int speaker_count() const { return static_cast<int>(directions_.size()); }
  int order() const { return order_; }
  const std::vector<Direction>& directions() const { return directions_; }
  // S x C: maps coefficients to loudspeaker feeds.
  const Eigen::MatrixXd& decode_matrix() const { return decode_matrix_; }

 private:
  std::vector<Direction> directions_;
  int order_;
  Eigen::MatrixXd decode_matrix_;
};

// S x L_F loudspeaker feeds. Frames below the layout order are zero-extended,
// which amounts to using the first (N+1)^2 columns of the decode matrix.
// Throws ShapeError if the frame order exceeds the layout order.
Eigen::MatrixXd decode_loudspeakers(const AmbisonicFrame& frame,
                                    const LoudspeakerLayout& layout);

// Same, for a C x T coefficient block that is not wrapped in a frame.
Eigen::MatrixXd decode_loudspeakers(const Eigen::MatrixXd& coefficients,
                                    const LoudspeakerLayout& layout);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_LOUDSPEAKER_LAYOUT_H_
