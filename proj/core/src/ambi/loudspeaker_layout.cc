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

#include "hoa/ambi/loudspeaker_layout.h"

#include <string>
#include <utility>

#include <Eigen/QR>

#include "hoa/ambi/sphere_design.h"
#include "hoa/ambi/spherical_harmonics.h"
#include "hoa/error.h"

namespace hoa::ambi {

Eigen::MatrixXd sh_sampling_matrix(const std::vector<Direction>& directions,
                                   int order) {
  const int channels = channel_count(order);
  Eigen::MatrixXd y(static_cast<Eigen::Index>(directions.size()), channels);
  std::vector<double> row(channels);
  for (std::size_t s = 0; s < directions.size(); ++s) {
    sh_eval_all(order, directions[s], row);
    for (int c = 0; c < channels; ++c) {
      y(static_cast<Eigen::Index>(s), c) = row[c];
    }
  }
  return y;
}

LoudspeakerLayout::LoudspeakerLayout(std::vector<Direction> directions,
                                     int order)
    : directions_(std::move(directions)), order_(order) {
  if (order_ < 0 || order_ > kMaxSupportedOrder) {
    throw ConfigError("order", "out of range");
  }
  const int channels = channel_count(order_);
  if (speaker_count() < channels) {
    throw ConfigError("directions",
                      std::to_string(speaker_count()) +
                          " loudspeakers cannot decode order " +
                          std::to_string(order_));
  }
  const Eigen::MatrixXd y = sh_sampling_matrix(directions_, order_);
  const Eigen::MatrixXd yt = y.transpose();
  decode_matrix_ = yt.completeOrthogonalDecomposition().pseudoInverse();

  const double deviation =
      (yt * decode_matrix_ - Eigen::MatrixXd::Identity(channels, channels))
          .cwiseAbs()
          .maxCoeff();
  if (deviation > kInverseTolerance) {
    throw ConfigError("directions",
                      "layout cannot resolve order " + std::to_string(order_) +
                          " (pseudo-inverse deviation " +
                          std::to_string(deviation) + ")");
  }
}

LoudspeakerLayout LoudspeakerLayout::builtin(int order) {
  return LoudspeakerLayout(chebyshev_fourier_design(order), order);
}

Eigen::MatrixXd decode_loudspeakers(const Eigen::MatrixXd& coefficients,
                                    const LoudspeakerLayout& layout) {
  if (coefficients.rows() > layout.decode_matrix().cols()) {
    throw ShapeError("decode_loudspeakers: " +
                     std::to_string(coefficients.rows()) +
                     " channels exceed layout order " +
                     std::to_string(layout.order()));
  }
  return layout.decode_matrix().leftCols(coefficients.rows()) * coefficients;
}

Eigen::MatrixXd decode_loudspeakers(const AmbisonicFrame& frame,
                                    const LoudspeakerLayout& layout) {
  return decode_loudspeakers(frame.samples(), layout);
}

}  // namespace hoa::ambi
