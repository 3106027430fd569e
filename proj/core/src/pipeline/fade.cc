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

#include "hoa/pipeline/fade.h"

#include <cmath>
#include <numbers>

#include "hoa/error.h"

namespace hoa::pipeline {

FadeWindow::FadeWindow(std::int64_t duration_samples)
    : duration_(duration_samples) {
  if (duration_ < 0) throw DomainError("fade duration must be >= 0");
}

double FadeWindow::value(std::int64_t offset) const {
  if (offset <= 0 && duration_ > 0) return 1.0;
  if (offset >= duration_) return 0.0;
  const double phase = static_cast<double>(offset) / static_cast<double>(duration_);
  return 0.5 * (1.0 + std::cos(std::numbers::pi * phase));
}

double fade_weight(double t, double fade_duration) {
  if (t >= fade_duration) return 0.0;
  if (t <= 0.0) return 1.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * t / fade_duration));
}

ambi::AmbisonicFrame apply_fade(const ambi::AmbisonicFrame& frame,
                                int low_order, const FadeWindow& window,
                                std::int64_t offset) {
  if (low_order < 0 || low_order > frame.order()) {
    throw OrderError("apply_fade: low order outside [0, frame order]");
  }
  ambi::AmbisonicFrame out = frame;
  const int low_channels = ambi::channel_count(low_order);
  Eigen::MatrixXd& samples = out.mutable_samples();
  for (int i = 0; i < frame.frame_length(); ++i) {
    const double w = window.value(offset + i);
    for (int c = low_channels; c < frame.channel_count(); ++c) {
      samples(c, i) *= w;
    }
  }
  return out;
}

}  // namespace hoa::pipeline
