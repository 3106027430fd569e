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

#ifndef HOA_PIPELINE_SENDER_H_
#define HOA_PIPELINE_SENDER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hoa/ambi/frame.h"
#include "hoa/pipeline/controller.h"
#include "hoa/wire/packet.h"

namespace hoa::pipeline {

struct SenderConfig {
  ControllerConfig controller;
  wire::OverflowPolicy overflow = wire::OverflowPolicy::kClamp;
};

struct SentPacket {
  wire::WirePacket packet;
  std::vector<std::uint8_t> bytes;
  TickDecision decision;
};

// One packet per tick: controller decision, truncation to the decided order,
// fade of the channels above the pending order, quantization.
class Sender {
 public:
  explicit Sender(SenderConfig config);

  // `frame` must be encoded at the configured maximum order. Propagates
  // encapsulation errors.
  SentPacket tick(const ambi::AmbisonicFrame& frame, std::optional<double> c_a,
                  double now);

  const AdaptationController& controller() const { return controller_; }
  std::uint64_t packets_sent() const { return sequence_; }
  std::uint64_t clamped_samples() const { return quantize_stats_.clamped; }

 private:
  SenderConfig config_;
  AdaptationController controller_;
  std::uint64_t sequence_ = 0;
  wire::QuantizeStats quantize_stats_;
};

// The fade step on its own: channels above decision.pending_order scaled by
// the raised-cosine window at the decision's offset. Identity when no fade
// is active.
ambi::AmbisonicFrame sender_apply_fade(const ambi::AmbisonicFrame& frame,
                                       const TickDecision& decision,
                                       std::int64_t fade_duration_samples);

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_SENDER_H_
