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

#include "hoa/scenario/trace.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hoa/error.h"

namespace hoa::scenario {
namespace {

constexpr TraceEvent kAllEvents[] = {
    TraceEvent::kPacketSent,    TraceEvent::kPacketLost,
    TraceEvent::kOrderChanged,  TraceEvent::kFadeStarted,
    TraceEvent::kFadeCompleted, TraceEvent::kConceal,
    TraceEvent::kBandwidthEstimate,
};

template <typename T>
void put(std::ostringstream& out, const std::optional<T>& v) {
  if (v) out << *v;
}

template <typename T>
std::optional<T> field(std::string_view text, int line) {
  if (text.empty()) return std::nullopt;
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw FormatError("trace line " + std::to_string(line) + ": bad number '" +
                      std::string(text) + "'");
  }
  return value;
}

}  // namespace

const char* to_string(TraceEvent event) {
  switch (event) {
    case TraceEvent::kPacketSent: return "packet_sent";
    case TraceEvent::kPacketLost: return "packet_lost";
    case TraceEvent::kOrderChanged: return "order_changed";
    case TraceEvent::kFadeStarted: return "fade_started";
    case TraceEvent::kFadeCompleted: return "fade_completed";
    case TraceEvent::kConceal: return "conceal";
    case TraceEvent::kBandwidthEstimate: return "bandwidth_estimate";
  }
  return "unknown";
}

std::optional<TraceEvent> parse_trace_event(std::string_view name) {
  for (TraceEvent e : kAllEvents) {
    if (name == to_string(e)) return e;
  }
  return std::nullopt;
}

void sort_trace(std::vector<TraceRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const TraceRow& a, const TraceRow& b) {
                     return a.time_ns < b.time_ns;
                   });
}

std::string format_trace(std::span<const TraceRow> rows) {
  std::ostringstream out;
  out << kTraceHeader << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TraceRow& r = rows[i];
    if (i > 0 && r.time_ns < rows[i - 1].time_ns) {
      throw DomainError("trace rows are not time-ordered at row " +
                        std::to_string(i));
    }
    out << r.time_ns << ',' << to_string(r.event) << ',';
    put(out, r.seq);
    out << ',';
    put(out, r.order);
    out << ',';
    put(out, r.bandwidth_bps);
    out << ',';
    put(out, r.queue_bytes);
    out << '\n';
  }
  return out.str();
}

std::vector<TraceRow> parse_trace(std::string_view csv) {
  std::vector<TraceRow> rows;
  int line_number = 0;
  while (!csv.empty()) {
    const std::size_t eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
    ++line_number;
    if (line_number == 1) {
      if (line != kTraceHeader) throw FormatError("unexpected trace header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        cells.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (cells.size() != 6) {
      throw FormatError("trace line " + std::to_string(line_number) +
                        ": expected 6 fields");
    }
    TraceRow row;
    row.time_ns = field<std::int64_t>(cells[0], line_number).value_or(0);
    const auto event = parse_trace_event(cells[1]);
    if (!event) {
      throw FormatError("trace line " + std::to_string(line_number) +
                        ": unknown event");
    }
    row.event = *event;
    row.seq = field<std::int64_t>(cells[2], line_number);
    row.order = field<int>(cells[3], line_number);
    row.bandwidth_bps = field<std::int64_t>(cells[4], line_number);
    row.queue_bytes = field<std::int64_t>(cells[5], line_number);
    rows.push_back(row);
  }
  if (line_number == 0) throw FormatError("empty trace");
  return rows;
}

void write_trace(std::span<const TraceRow> rows,
                 const std::filesystem::path& path) {
  const std::string text = format_trace(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace hoa::scenario
