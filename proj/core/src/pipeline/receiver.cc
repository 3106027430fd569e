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

#include "hoa/pipeline/receiver.h"

#include <utility>

#include "hoa/error.h"
#include "hoa/pipeline/fade.h"

namespace hoa::pipeline {

Receiver::Receiver(ReceiverConfig config)
    : config_(config), buffer_(config.jitter_depth_frames) {
  if (config_.session_max_order < 0 ||
      config_.session_max_order > wire::kMaxWireOrder) {
    throw DomainError("receiver: session order outside [0, 15]");
  }
  if (config_.frame_length < 1 || !(config_.sample_rate > 0.0)) {
    throw DomainError("receiver: invalid frame length or sample rate");
  }
}

void Receiver::on_datagram(std::span<const std::uint8_t> bytes,
                           double arrival_time) {
  wire::ParseResult parsed = wire::parse_packet(bytes);
  if (!parsed.ok()) {
    parse_errors_.record(parsed.error().kind);
    return;
  }
  wire::WirePacket packet = std::move(parsed).packet();
  if (packet.header.order > config_.session_max_order ||
      packet.header.frame_length != config_.frame_length) {
    // Well-formed but not for this session.
    parse_errors_.record(wire::ParseErrorKind::kLengthMismatch);
    return;
  }
  const std::int64_t seq = buffer_.unwrap(packet.header.sequence);
  if (buffer_.insert(std::move(packet)) ==
      JitterBuffer::InsertResult::kAccepted) {
    ++accepted_;
    if (!anchor_) {
      anchor_ = arrival_time - static_cast<double>(seq) * config_.packet_interval();
      *anchor_ += config_.jitter_depth_frames * config_.packet_interval();
    }
  }
}

std::optional<double> Receiver::next_playout_time() const {
  if (!anchor_) return std::nullopt;
  return *anchor_ +
         static_cast<double>(buffer_.next_playout_seq()) * config_.packet_interval();
}

void Receiver::anchor_at(double playout_time_of_seq0) {
  if (!anchor_) anchor_ = playout_time_of_seq0;
}

PlayoutFrame Receiver::play() {
  const std::int64_t seq = buffer_.next_playout_seq();
  const std::int64_t start = seq * config_.frame_length;
  std::optional<wire::WirePacket> packet = buffer_.pop();
  if (!packet) {
    return PlayoutFrame{
        seq,
        ambi::AmbisonicFrame::zeros(config_.session_max_order,
                                    config_.frame_length, config_.sample_rate,
                                    start),
        /*concealed=*/true};
  }
  const wire::PacketHeader& h = packet->header;
  const ambi::AmbisonicFrame received =
      wire::dequantize(*packet, config_.sample_rate);
  PlayoutFrame out{
      seq,
      ambi::AmbisonicFrame(
          config_.session_max_order,
          ambi::pad_order(received, config_.session_max_order).samples(),
          config_.sample_rate, start),
      /*concealed=*/false};
  out.received_order = h.order;
  out.fade_active = h.flags.fade_active;
  out.fade_remaining = h.fade_remaining;
  if (out.fade_active && config_.fade_duration_samples > 0) {
    out.fade_weight = FadeWindow(config_.fade_duration_samples)
                          .value(config_.fade_duration_samples - h.fade_remaining);
  }
  return out;
}

}  // namespace hoa::pipeline
