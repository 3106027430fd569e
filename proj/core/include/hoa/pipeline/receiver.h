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

#ifndef HOA_PIPELINE_RECEIVER_H_
#define HOA_PIPELINE_RECEIVER_H_

#include <cstdint>
#include <optional>
#include <span>

#include "hoa/ambi/frame.h"
#include "hoa/pipeline/jitter_buffer.h"
#include "hoa/wire/packet.h"

namespace hoa::pipeline {

struct ReceiverConfig {
  int session_max_order = 3;
  double sample_rate = 48000.0;
  int frame_length = 128;
  int jitter_depth_frames = 4;
  // Session fade length, used with the header's fade_remaining to recover
  // the window position.
  std::int64_t fade_duration_samples = 0;

  double packet_interval() const { return frame_length / sample_rate; }
};

struct PlayoutFrame {
  std::int64_t seq = 0;
  // Always at the session maximum order.
  ambi::AmbisonicFrame frame;
  bool concealed = false;
  int received_order = -1;  // -1 when concealed
  bool fade_active = false;
  std::uint16_t fade_remaining = 0;
  // Fade window value at the first sample; 1 when no fade is running.
  double fade_weight = 1.0;
};

// Receiving end: parse -> jitter buffer -> dequantize -> zero-pad.
//
// Playout is clocked: the first accepted packet, with sequence s arriving at
// time a, fixes frame k's deadline at a + (k - s + depth) * T_P. Packets that
// arrive after their deadline are dropped as late. The fade window was
// already applied by the sender, so during a fade the received high-order
// channels are passed through as they are.
class Receiver {
 public:
  explicit Receiver(ReceiverConfig config);

  // Malformed datagrams are counted in parse_errors() and ignored.
  void on_datagram(std::span<const std::uint8_t> bytes, double arrival_time);

  // Deadline of the next frame; empty until a packet has been accepted.
  std::optional<double> next_playout_time() const;
  // Starts the playout clock without a packet (nothing ever arrived).
  void anchor_at(double playout_time_of_seq0);

  PlayoutFrame play();

  const ReceiverConfig& config() const { return config_; }
  const JitterBuffer& buffer() const { return buffer_; }
  const wire::ParseErrorCounts& parse_errors() const { return parse_errors_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  ReceiverConfig config_;
  JitterBuffer buffer_;
  wire::ParseErrorCounts parse_errors_;
  std::optional<double> anchor_;
  std::uint64_t accepted_ = 0;
};

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_RECEIVER_H_
