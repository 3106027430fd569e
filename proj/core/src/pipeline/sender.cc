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

#include "hoa/pipeline/sender.h"

#include <utility>

#include "hoa/error.h"
#include "hoa/pipeline/fade.h"

namespace hoa::pipeline {

ambi::AmbisonicFrame sender_apply_fade(const ambi::AmbisonicFrame& frame,
                                       const TickDecision& decision,
                                       std::int64_t fade_duration_samples) {
  if (!decision.fade_active) return frame;
  return apply_fade(frame, decision.pending_order,
                    FadeWindow(fade_duration_samples), decision.fade_offset);
}

Sender::Sender(SenderConfig config)
    : config_(std::move(config)), controller_(config_.controller) {}

SentPacket Sender::tick(const ambi::AmbisonicFrame& frame,
                        std::optional<double> c_a, double now) {
  if (frame.order() != config_.controller.max_order) {
    throw OrderError("sender: frame order differs from the configured maximum");
  }
  const TickDecision decision = controller_.tick(c_a, now);
  ambi::AmbisonicFrame out = ambi::truncate_order(frame, decision.order);
  out = sender_apply_fade(out, decision,
                          config_.controller.fade_duration_samples());
  wire::PacketFlags flags;
  flags.fade_active = decision.fade_active;
  flags.order_change = decision.order_changed;
  wire::EncapsulateOptions options;
  options.bit_depth = config_.controller.bit_depth;
  options.overflow = config_.overflow;
  SentPacket sent{
      wire::encapsulate(out, static_cast<std::uint16_t>(sequence_),
                        decision.fade_remaining, flags, options,
                        &quantize_stats_),
      {}, decision};
  sent.bytes = wire::serialize(sent.packet);
  ++sequence_;
  return sent;
}

}  // namespace hoa::pipeline
