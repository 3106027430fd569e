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

#ifndef HOA_PIPELINE_FADE_H_
#define HOA_PIPELINE_FADE_H_

#include <cstdint>

#include "hoa/ambi/frame.h"

namespace hoa::pipeline {

// Raised-cosine fade-out w(t) = 0.5 * (1 + cos(pi * t / T_f)) on [0, T_f],
// 1 before and 0 after. Offsets are in samples.
class FadeWindow {
 public:
  // Throws DomainError if duration_samples < 0.
  explicit FadeWindow(std::int64_t duration_samples);

  std::int64_t duration() const { return duration_; }
  double value(std::int64_t offset) const;

 private:
  std::int64_t duration_;
};

// Same window in seconds.
double fade_weight(double t, double fade_duration);

// Scales every channel above `low_order` by w(offset + i) at column i; the
// low channels are untouched. Equivalent to pad(truncate(F, N')) + w * H with
// H = high_order_residual(F, N').
ambi::AmbisonicFrame apply_fade(const ambi::AmbisonicFrame& frame,
                                int low_order, const FadeWindow& window,
                                std::int64_t offset);

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_FADE_H_
