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

#ifndef HOA_PIPELINE_JITTER_BUFFER_H_
#define HOA_PIPELINE_JITTER_BUFFER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hoa/wire/packet.h"

namespace hoa::pipeline {

// Reorders packets by sequence number and releases them one per playout
// step. 16-bit sequence numbers are unwrapped against the next playout
// position.
class JitterBuffer {
 public:
  enum class InsertResult { kAccepted, kDuplicate, kLate };

  // Throws DomainError if depth_frames < 0.
  explicit JitterBuffer(int depth_frames = 4);

  InsertResult insert(wire::WirePacket packet);

  // Releases the packet for next_playout_seq() and advances; empty means the
  // frame never arrived and must be concealed.
  std::optional<wire::WirePacket> pop();

  int depth() const { return depth_; }
  std::int64_t next_playout_seq() const { return next_seq_; }
  std::size_t buffered() const { return slots_.size(); }
  // Unwrapped sequence number `seq` would receive now.
  std::int64_t unwrap(std::uint16_t seq) const;

  std::uint64_t popped() const { return popped_; }
  std::uint64_t concealed() const { return concealed_; }
  std::uint64_t duplicates() const { return duplicates_; }
  std::uint64_t late() const { return late_; }

 private:
  int depth_;
  std::int64_t next_seq_ = 0;
  std::map<std::int64_t, wire::WirePacket> slots_;
  // seen_[s & 0xFFFF] == s once sequence s has been accepted.
  std::vector<std::int64_t> seen_;
  std::uint64_t popped_ = 0;
  std::uint64_t concealed_ = 0;
  std::uint64_t duplicates_ = 0;
  std::uint64_t late_ = 0;
};

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_JITTER_BUFFER_H_
