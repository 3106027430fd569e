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

#ifndef HOA_SCENARIO_CAPTURE_H_
#define HOA_SCENARIO_CAPTURE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hoa::scenario {

// Packet capture: "HOAP", u16 version (1), u16 zero, then records of
// [u64 time_ns][u32 length][length bytes], all big-endian.
struct CaptureRecord {
  std::int64_t time_ns = 0;
  std::vector<std::uint8_t> bytes;

  bool operator==(const CaptureRecord&) const = default;
};

std::vector<std::uint8_t> encode_capture(std::span<const CaptureRecord> records);
// Throws FormatError on a bad magic, version or truncated record.
std::vector<CaptureRecord> decode_capture(std::span<const std::uint8_t> bytes);

void write_capture(std::span<const CaptureRecord> records,
                   const std::filesystem::path& path);
std::vector<CaptureRecord> read_capture(const std::filesystem::path& path);

// One human-readable line per datagram (header fields, or the parse error).
std::string describe_datagram(std::span<const std::uint8_t> bytes);
void dump_capture(std::span<const CaptureRecord> records, std::ostream& out);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_CAPTURE_H_
