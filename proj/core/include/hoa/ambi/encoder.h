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

#ifndef HOA_AMBI_ENCODER_H_
#define HOA_AMBI_ENCODER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hoa/ambi/capsule_array.h"
#include "hoa/ambi/direction.h"
#include "hoa/ambi/frame.h"

namespace hoa::ambi {

using Trajectory = std::function<Direction(std::int64_t sample_index)>;

// A mono source signal, normalized to full scale, with a per-sample direction.
class SourceSignal {
 public:
  // Throws DomainError if any |sample| > 1 or is non-finite, or the rate is
  // not positive.
  SourceSignal(std::vector<double> samples, double sample_rate,
               Trajectory trajectory);

  static SourceSignal fixed(std::vector<double> samples, double sample_rate,
                            Direction direction);

  const std::vector<double>& samples() const { return samples_; }
  double sample_rate() const { return sample_rate_; }
  std::int64_t length() const {
    return static_cast<std::int64_t>(samples_.size());
  }
  Direction direction_at(std::int64_t sample_index) const {
    return trajectory_(sample_index);
  }

 private:
  std::vector<double> samples_;
  double sample_rate_;
  Trajectory trajectory_;
};

// alpha_{n,m}(t) = sum_q w_q p_q(t) Y_{n,m}(d_q), with unit radial
// normalization. `pressures` is Q x L_F, one row per capsule.
// Throws OrderError if order > array.order_limit(), ShapeError on a row count
// other than Q.
AmbisonicFrame encode_capsules(const Eigen::MatrixXd& pressures,
                               const CapsuleArray& array, int order,
                               double sample_rate,
                               std::int64_t start_index = 0);

// Synthetic plane-wave encoder: channel acn(n,m), sample i is
// samples[start + i] * Y_{n,m}(trajectory(start + i)).
// Throws RangeError if the window runs past the end of the source.
AmbisonicFrame encode_plane_wave(const SourceSignal& source, int order,
                                 std::int64_t start_index, int frame_length);

// Sum of encode_plane_wave over several sources (mixing in the SH domain).
AmbisonicFrame encode_plane_waves(std::span<const SourceSignal> sources,
                                  int order, std::int64_t start_index,
                                  int frame_length);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_ENCODER_H_
