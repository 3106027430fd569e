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

#include "hoa/scenario/capture.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "hoa/error.h"
#include "hoa/wire/packet.h"

namespace hoa::scenario {
namespace {

constexpr char kMagic[4] = {'H', 'O', 'A', 'P'};
constexpr std::uint16_t kCaptureVersion = 1;
constexpr std::size_t kFileHeader = 8;
constexpr std::size_t kRecordHeader = 12;

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int b = bytes - 1; b >= 0; --b) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int b = 0; b < bytes; ++b) v = (v << 8) | in[at + b];
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_capture(std::span<const CaptureRecord> records) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  put_be(out, kCaptureVersion, 2);
  put_be(out, 0, 2);
  for (const CaptureRecord& r : records) {
    put_be(out, static_cast<std::uint64_t>(r.time_ns), 8);
    put_be(out, r.bytes.size(), 4);
    out.insert(out.end(), r.bytes.begin(), r.bytes.end());
  }
  return out;
}

std::vector<CaptureRecord> decode_capture(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFileHeader ||
      !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw FormatError("not a packet capture (bad magic)");
  }
  if (get_be(bytes, 4, 2) != kCaptureVersion) {
    throw FormatError("unsupported capture version");
  }
  std::vector<CaptureRecord> records;
  std::size_t at = kFileHeader;
  while (at < bytes.size()) {
    if (bytes.size() - at < kRecordHeader) {
      throw FormatError("truncated capture record header");
    }
    CaptureRecord r;
    r.time_ns = static_cast<std::int64_t>(get_be(bytes, at, 8));
    const std::uint64_t length = get_be(bytes, at + 8, 4);
    at += kRecordHeader;
    if (bytes.size() - at < length) throw FormatError("truncated capture record");
    r.bytes.assign(bytes.begin() + at, bytes.begin() + at + length);
    at += length;
    records.push_back(std::move(r));
  }
  return records;
}

void write_capture(std::span<const CaptureRecord> records,
                   const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_capture(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<CaptureRecord> read_capture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_capture(bytes);
}

std::string describe_datagram(std::span<const std::uint8_t> bytes) {
  const wire::ParseResult parsed = wire::parse_packet(bytes);
  std::ostringstream out;
  if (!parsed.ok()) {
    out << "MALFORMED " << wire::to_string(parsed.error().kind) << " ("
        << parsed.error().message << ") len=" << bytes.size();
    return out.str();
  }
  const wire::PacketHeader& h = parsed.packet().header;
  out << "seq=" << h.sequence << " ts=" << h.timestamp
      << " order=" << static_cast<int>(h.order)
      << " channels=" << (h.order + 1) * (h.order + 1)
      << " bits=" << static_cast<int>(h.bit_depth)
      << " frame=" << h.frame_length << " flags="
      << (h.flags.fade_active ? "F" : "-") << (h.flags.order_change ? "C" : "-")
      << " fade_remaining=" << h.fade_remaining << " len=" << bytes.size();
  return out.str();
}

void dump_capture(std::span<const CaptureRecord> records, std::ostream& out) {
  for (const CaptureRecord& r : records) {
    out << r.time_ns << ' ' << describe_datagram(r.bytes) << '\n';
  }
}

}  // namespace hoa::scenario
