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

#ifndef HOA_AMBI_CAPSULE_ARRAY_H_
#define HOA_AMBI_CAPSULE_ARRAY_H_

#include <vector>

#include <Eigen/Core>

#include "hoa/ambi/direction.h"

namespace hoa::ambi {

// Weighted inner products sum_q w_q Y_i(d_q) Y_j(d_q) for all ACN channels
// i, j <= channel_count(order). The identity when the sampling is a valid
// quadrature up to `order`.
Eigen::MatrixXd quadrature_gram(const std::vector<Direction>& directions,
                                const std::vector<double>& weights, int order);

// A spherical microphone array: Q capsule directions with quadrature weights
// that make the discrete SH projection exact up to order_limit.
//
// Construction validates Q >= (order_limit + 1)^2, that the weights sum to
// 4 pi (1e-9 relative) and that the quadrature Gram matrix is the identity
// within 1e-6; any violation throws ConfigError.
class CapsuleArray {
 public:
  static constexpr double kWeightSumTolerance = 1e-9;
  static constexpr double kOrthonormalityTolerance = 1e-6;

  CapsuleArray(std::vector<Direction> directions, std::vector<double> weights,
               int order_limit);

  // Equal-weight Chebyshev-Fourier design (36 capsules for order 3).
  static CapsuleArray builtin(int order_limit);

  int count() const { return static_cast<int>(directions_.size()); }
  int order_limit() const { return order_limit_; }
  const std::vector<Direction>& directions() const { return directions_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Direction> directions_;
  std::vector<double> weights_;
  int order_limit_;
};

}  // namespace hoa::ambi

#endif  // HOA_AMBI_CAPSULE_ARRAY_H_
