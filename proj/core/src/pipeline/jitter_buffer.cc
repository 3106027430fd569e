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

#include "hoa/pipeline/jitter_buffer.h"

#include <utility>

#include "hoa/error.h"

namespace hoa::pipeline {

JitterBuffer::JitterBuffer(int depth_frames)
    : depth_(depth_frames), seen_(1 << 16, -1) {
  if (depth_ < 0) throw DomainError("jitter buffer depth must be >= 0");
}

std::int64_t JitterBuffer::unwrap(std::uint16_t seq) const {
  return next_seq_ +
         wire::sequence_delta(seq, static_cast<std::uint16_t>(next_seq_));
}

JitterBuffer::InsertResult JitterBuffer::insert(wire::WirePacket packet) {
  const std::int64_t seq = unwrap(packet.header.sequence);
  if (seq >= 0 && seen_[seq & 0xFFFF] == seq) {
    ++duplicates_;
    return InsertResult::kDuplicate;
  }
  if (seq < next_seq_) {
    ++late_;
    return InsertResult::kLate;
  }
  seen_[seq & 0xFFFF] = seq;
  slots_.emplace(seq, std::move(packet));
  return InsertResult::kAccepted;
}

std::optional<wire::WirePacket> JitterBuffer::pop() {
  ++popped_;
  const std::int64_t seq = next_seq_++;
  const auto it = slots_.find(seq);
  if (it == slots_.end()) {
    ++concealed_;
    return std::nullopt;
  }
  wire::WirePacket packet = std::move(it->second);
  slots_.erase(it);
  return packet;
}

}  // namespace hoa::pipeline
