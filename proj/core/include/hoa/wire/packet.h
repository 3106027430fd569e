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

#ifndef HOA_WIRE_PACKET_H_
#define HOA_WIRE_PACKET_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hoa/ambi/frame.h"

// Packet layout (all fields big-endian, 16-byte header, see
// docs/wire-format.md):
//
//   0  magic 'H' 'A'        2 bytes
//   2  version (1)          1 byte
//   3  flags                1 byte   bit0 fade_active, bit1 order_change,
//                                    bits 2-7 reserved (0)
//   4  sequence             2 bytes  wraps at 2^16
//   6  timestamp            4 bytes  first sample index t_k, mod 2^32
//  10  order                1 byte   0..15
//  11  bit depth            1 byte   16, 24 or 32
//  12  frame length L_F     2 bytes  >= 1
//  14  fade remaining       2 bytes  samples until the fade completes
//  16  payload              (order+1)^2 * L_F signed PCM words, channel-major

namespace hoa::wire {

inline constexpr std::size_t kHeaderSize = 16;
inline constexpr std::uint8_t kMagic0 = 0x48;  // 'H'
inline constexpr std::uint8_t kMagic1 = 0x41;  // 'A'
inline constexpr std::uint8_t kVersion = 1;
inline constexpr int kMaxWireOrder = 15;

inline constexpr std::uint8_t kFlagFadeActive = 0x01;
inline constexpr std::uint8_t kFlagOrderChange = 0x02;
inline constexpr std::uint8_t kReservedFlagMask = 0xFC;

struct PacketFlags {
  bool fade_active = false;
  bool order_change = false;

  std::uint8_t to_byte() const {
    return static_cast<std::uint8_t>((fade_active ? kFlagFadeActive : 0) |
                                     (order_change ? kFlagOrderChange : 0));
  }
  bool operator==(const PacketFlags&) const = default;
};

struct PacketHeader {
  PacketFlags flags;
  std::uint16_t sequence = 0;
  std::uint32_t timestamp = 0;
  std::uint8_t order = 0;
  std::uint8_t bit_depth = 16;
  std::uint16_t frame_length = 0;
  std::uint16_t fade_remaining = 0;

  bool operator==(const PacketHeader&) const = default;
};

struct WirePacket {
  PacketHeader header;
  std::vector<std::uint8_t> payload;

  bool operator==(const WirePacket&) const = default;
};

bool is_supported_bit_depth(int bit_depth);

// Payload size in bits: sum over channels (n, m) of B(n, m) * L_F. Throws
// DomainError on an unsupported depth, negative order or L_F < 1.
std::uint64_t payload_size(int order, int bit_depth, int frame_length);
// General form with a depth per ACN channel.
std::uint64_t payload_size(std::span<const int> channel_bit_depths,
                           int frame_length);

// Signed PCM quantization: round half away from zero of x * 2^(B-1), clamped
// to [-2^(B-1), 2^(B-1) - 1]. `out_of_range` is set when |x| > 1.
std::int32_t quantize_sample(double x, int bit_depth, bool* out_of_range);
// q / 2^(B-1).
double dequantize_sample(std::int32_t q, int bit_depth);

enum class OverflowPolicy { kClamp, kError };

struct EncapsulateOptions {
  int bit_depth = 16;
  OverflowPolicy overflow = OverflowPolicy::kClamp;
};

struct QuantizeStats {
  std::size_t clamped = 0;
};

// Quantizes the frame and fills in the header from its metadata
// (timestamp = start_index mod 2^32). Throws DomainError on an unsupported
// depth or order > 15 or L_F > 65535, OverflowError when a sample exceeds full
// scale under OverflowPolicy::kError. With kClamp, clamps are added to
// `stats` when given.
WirePacket encapsulate(const ambi::AmbisonicFrame& frame,
                       std::uint16_t sequence, std::uint16_t fade_remaining,
                       PacketFlags flags, const EncapsulateOptions& options = {},
                       QuantizeStats* stats = nullptr);

std::vector<std::uint8_t> serialize(const WirePacket& packet);

enum class ParseErrorKind {
  kTruncatedHeader,
  kBadMagic,
  kBadVersion,
  kReservedFlags,
  kBadBitDepth,
  kBadOrder,
  kBadFrameLength,
  kLengthMismatch,
};
inline constexpr std::size_t kParseErrorKindCount = 8;

const char* to_string(ParseErrorKind kind);

struct ParseError {
  ParseErrorKind kind;
  std::string message;
};

class ParseResult {
 public:
  ParseResult(WirePacket packet) : value_(std::move(packet)) {}  // NOLINT
  ParseResult(ParseError error) : value_(std::move(error)) {}    // NOLINT

  bool ok() const { return std::holds_alternative<WirePacket>(value_); }
  const WirePacket& packet() const& { return std::get<WirePacket>(value_); }
  WirePacket&& packet() && { return std::get<WirePacket>(std::move(value_)); }
  const ParseError& error() const { return std::get<ParseError>(value_); }

 private:
  std::variant<WirePacket, ParseError> value_;
};

// Validates and decodes one datagram. Never throws on malformed input.
ParseResult parse_packet(std::span<const std::uint8_t> bytes);

// Rejection tally kept by receivers; malformed packets are counted, not
// fatal.
class ParseErrorCounts {
 public:
  void record(ParseErrorKind kind) { ++counts_[static_cast<std::size_t>(kind)]; }
  std::uint64_t count(ParseErrorKind kind) const {
    return counts_[static_cast<std::size_t>(kind)];
  }
  std::uint64_t total() const;

 private:
  std::array<std::uint64_t, kParseErrorKindCount> counts_{};
};

// PCM words back to [-1, 1); order and L_F come from the header and
// start_index from the timestamp.
ambi::AmbisonicFrame dequantize(const WirePacket& packet, double sample_rate);

// Serial-number arithmetic on 16-bit sequence numbers: signed distance a - b
// in [-32768, 32767].
int sequence_delta(std::uint16_t a, std::uint16_t b);

}  // namespace hoa::wire

#endif  // HOA_WIRE_PACKET_H_
