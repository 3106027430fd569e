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

#include "hoa/ambi/capsule_array.h"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hoa/ambi/sphere_design.h"
#include "hoa/ambi/spherical_harmonics.h"
#include "hoa/error.h"

namespace hoa::ambi {

Eigen::MatrixXd quadrature_gram(const std::vector<Direction>& directions,
                                const std::vector<double>& weights,
                                int order) {
  if (directions.size() != weights.size()) {
    throw ShapeError("quadrature_gram: directions/weights length mismatch");
  }
  const int channels = channel_count(order);
  Eigen::MatrixXd basis(directions.size(), channels);
  std::vector<double> row(channels);
  for (std::size_t q = 0; q < directions.size(); ++q) {
    sh_eval_all(order, directions[q], row);
    for (int c = 0; c < channels; ++c) basis(q, c) = row[c];
  }
  const Eigen::Map<const Eigen::VectorXd> w(weights.data(),
                                            static_cast<Eigen::Index>(weights.size()));
  return basis.transpose() * w.asDiagonal() * basis;
}

CapsuleArray::CapsuleArray(std::vector<Direction> directions,
                           std::vector<double> weights, int order_limit)
    : directions_(std::move(directions)),
      weights_(std::move(weights)),
      order_limit_(order_limit) {
  if (order_limit_ < 0 || order_limit_ > kMaxSupportedOrder) {
    throw ConfigError("order_limit", "out of range");
  }
  if (weights_.size() != directions_.size()) {
    throw ConfigError("weights", "need one weight per capsule");
  }
  if (count() < channel_count(order_limit_)) {
    throw ConfigError("directions",
                      std::to_string(count()) + " capsules cannot support order " +
                          std::to_string(order_limit_));
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 4.0 * kPi) > kWeightSumTolerance * 4.0 * kPi) {
    throw ConfigError("weights", "sum to " + std::to_string(total) +
                                     ", expected 4*pi");
  }
  const Eigen::MatrixXd gram =
      quadrature_gram(directions_, weights_, order_limit_);
  const double deviation =
      (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (deviation > kOrthonormalityTolerance) {
    throw ConfigError("directions",
                      "quadrature is not orthonormal up to order " +
                          std::to_string(order_limit_) + " (max deviation " +
                          std::to_string(deviation) + ")");
  }
}

CapsuleArray CapsuleArray::builtin(int order_limit) {
  std::vector<Direction> directions = chebyshev_fourier_design(order_limit);
  const double weight = 4.0 * kPi / static_cast<double>(directions.size());
  std::vector<double> weights(directions.size(), weight);
  return CapsuleArray(std::move(directions), std::move(weights), order_limit);
}

}  // namespace hoa::ambi
