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

#ifndef HOA_SCENARIO_TRACE_H_
#define HOA_SCENARIO_TRACE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoa::scenario {

enum class TraceEvent {
  kPacketSent,
  kPacketLost,
  kOrderChanged,
  kFadeStarted,
  kFadeCompleted,
  kConceal,
  kBandwidthEstimate,
};

const char* to_string(TraceEvent event);
std::optional<TraceEvent> parse_trace_event(std::string_view name);

// One CSV row. Absent fields are written empty.
struct TraceRow {
  std::int64_t time_ns = 0;
  TraceEvent event = TraceEvent::kPacketSent;
  std::optional<std::int64_t> seq;
  std::optional<int> order;
  std::optional<std::int64_t> bandwidth_bps;
  std::optional<std::int64_t> queue_bytes;

  bool operator==(const TraceRow&) const = default;
};

inline constexpr std::string_view kTraceHeader =
    "time_ns,event,seq,order,bandwidth_bps,queue_bytes";

// Stable sort by time.
void sort_trace(std::vector<TraceRow>& rows);

// Header line plus one line per row, '\n' terminated. Throws DomainError if
// the rows are not time-ordered.
std::string format_trace(std::span<const TraceRow> rows);
// Inverse of format_trace. Throws FormatError.
std::vector<TraceRow> parse_trace(std::string_view csv);

// Throws IoError.
void write_trace(std::span<const TraceRow> rows, const std::filesystem::path& path);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_TRACE_H_
