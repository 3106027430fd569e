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

#include "hoa/wire/packet.h"

#include <cmath>
#include <numeric>
#include <utility>

#include "hoa/error.h"

namespace hoa::wire {
namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>((b[at] << 8) | b[at + 1]);
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return (static_cast<std::uint32_t>(b[at]) << 24) |
         (static_cast<std::uint32_t>(b[at + 1]) << 16) |
         (static_cast<std::uint32_t>(b[at + 2]) << 8) |
         static_cast<std::uint32_t>(b[at + 3]);
}

void check_depth(int bit_depth) {
  if (!is_supported_bit_depth(bit_depth)) {
    throw DomainError("unsupported bit depth " + std::to_string(bit_depth));
  }
}

ParseError fail(ParseErrorKind kind, std::string message) {
  return ParseError{kind, std::move(message)};
}

}  // namespace

bool is_supported_bit_depth(int bit_depth) {
  return bit_depth == 16 || bit_depth == 24 || bit_depth == 32;
}

std::uint64_t payload_size(std::span<const int> channel_bit_depths,
                           int frame_length) {
  if (frame_length < 1) throw DomainError("payload_size: L_F must be >= 1");
  std::uint64_t bits_per_sample_column = 0;
  for (int depth : channel_bit_depths) {
    check_depth(depth);
    bits_per_sample_column += static_cast<std::uint64_t>(depth);
  }
  return bits_per_sample_column * static_cast<std::uint64_t>(frame_length);
}

std::uint64_t payload_size(int order, int bit_depth, int frame_length) {
  if (order < 0) throw DomainError("payload_size: negative order");
  check_depth(bit_depth);
  const std::vector<int> depths(
      static_cast<std::size_t>(ambi::channel_count(order)), bit_depth);
  return payload_size(depths, frame_length);
}

std::int32_t quantize_sample(double x, int bit_depth, bool* out_of_range) {
  const double full_scale = std::ldexp(1.0, bit_depth - 1);
  if (out_of_range != nullptr) *out_of_range = std::abs(x) > 1.0;
  const double scaled = std::round(x * full_scale);  // half away from zero
  const double lo = -full_scale;
  const double hi = full_scale - 1.0;
  const double clamped = scaled < lo ? lo : (scaled > hi ? hi : scaled);
  return static_cast<std::int32_t>(clamped);
}

double dequantize_sample(std::int32_t q, int bit_depth) {
  return std::ldexp(static_cast<double>(q), -(bit_depth - 1));
}

WirePacket encapsulate(const ambi::AmbisonicFrame& frame,
                       std::uint16_t sequence, std::uint16_t fade_remaining,
                       PacketFlags flags, const EncapsulateOptions& options,
                       QuantizeStats* stats) {
  check_depth(options.bit_depth);
  if (frame.order() > kMaxWireOrder) {
    throw DomainError("encapsulate: order " + std::to_string(frame.order()) +
                      " exceeds wire limit");
  }
  if (frame.frame_length() > 0xFFFF) {
    throw DomainError("encapsulate: frame length exceeds 65535");
  }
  WirePacket packet;
  packet.header.flags = flags;
  packet.header.sequence = sequence;
  packet.header.timestamp = static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(frame.start_index()) & 0xFFFFFFFFu);
  packet.header.order = static_cast<std::uint8_t>(frame.order());
  packet.header.bit_depth = static_cast<std::uint8_t>(options.bit_depth);
  packet.header.frame_length = static_cast<std::uint16_t>(frame.frame_length());
  packet.header.fade_remaining = fade_remaining;

  const int bytes_per_sample = options.bit_depth / 8;
  const auto& samples = frame.samples();
  packet.payload.reserve(static_cast<std::size_t>(samples.size()) *
                         bytes_per_sample);
  std::size_t clamped = 0;
  for (Eigen::Index c = 0; c < samples.rows(); ++c) {
    for (Eigen::Index i = 0; i < samples.cols(); ++i) {
      bool out_of_range = false;
      const std::int32_t q =
          quantize_sample(samples(c, i), options.bit_depth, &out_of_range);
      if (out_of_range) {
        if (options.overflow == OverflowPolicy::kError) {
          throw OverflowError("encapsulate: sample above full scale in channel " +
                              std::to_string(c));
        }
        ++clamped;
      }
      const auto word = static_cast<std::uint32_t>(q);
      for (int b = bytes_per_sample - 1; b >= 0; --b) {
        packet.payload.push_back(static_cast<std::uint8_t>(word >> (8 * b)));
      }
    }
  }
  if (stats != nullptr) stats->clamped += clamped;
  return packet;
}

std::vector<std::uint8_t> serialize(const WirePacket& packet) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + packet.payload.size());
  const PacketHeader& h = packet.header;
  out.push_back(kMagic0);
  out.push_back(kMagic1);
  out.push_back(kVersion);
  out.push_back(h.flags.to_byte());
  put_u16(out, h.sequence);
  put_u32(out, h.timestamp);
  out.push_back(h.order);
  out.push_back(h.bit_depth);
  put_u16(out, h.frame_length);
  put_u16(out, h.fade_remaining);
  out.insert(out.end(), packet.payload.begin(), packet.payload.end());
  return out;
}

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kTruncatedHeader: return "truncated_header";
    case ParseErrorKind::kBadMagic: return "bad_magic";
    case ParseErrorKind::kBadVersion: return "bad_version";
    case ParseErrorKind::kReservedFlags: return "reserved_flags";
    case ParseErrorKind::kBadBitDepth: return "bad_bit_depth";
    case ParseErrorKind::kBadOrder: return "bad_order";
    case ParseErrorKind::kBadFrameLength: return "bad_frame_length";
    case ParseErrorKind::kLengthMismatch: return "length_mismatch";
  }
  return "unknown";
}

ParseResult parse_packet(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    return fail(ParseErrorKind::kTruncatedHeader,
                std::to_string(bytes.size()) + " bytes, header needs 16");
  }
  if (bytes[0] != kMagic0 || bytes[1] != kMagic1) {
    return fail(ParseErrorKind::kBadMagic, "magic is not 'HA'");
  }
  if (bytes[2] != kVersion) {
    return fail(ParseErrorKind::kBadVersion,
                "version " + std::to_string(bytes[2]));
  }
  if ((bytes[3] & kReservedFlagMask) != 0) {
    return fail(ParseErrorKind::kReservedFlags, "reserved flag bits set");
  }
  PacketHeader h;
  h.flags.fade_active = (bytes[3] & kFlagFadeActive) != 0;
  h.flags.order_change = (bytes[3] & kFlagOrderChange) != 0;
  h.sequence = get_u16(bytes, 4);
  h.timestamp = get_u32(bytes, 6);
  h.order = bytes[10];
  h.bit_depth = bytes[11];
  h.frame_length = get_u16(bytes, 12);
  h.fade_remaining = get_u16(bytes, 14);

  if (h.order > kMaxWireOrder) {
    return fail(ParseErrorKind::kBadOrder,
                "order " + std::to_string(h.order) + " > 15");
  }
  if (!is_supported_bit_depth(h.bit_depth)) {
    return fail(ParseErrorKind::kBadBitDepth,
                "bit depth " + std::to_string(h.bit_depth));
  }
  if (h.frame_length == 0) {
    return fail(ParseErrorKind::kBadFrameLength, "frame length 0");
  }
  const std::uint64_t expected_bytes =
      payload_size(h.order, h.bit_depth, h.frame_length) / 8;
  const std::uint64_t actual_bytes = bytes.size() - kHeaderSize;
  if (actual_bytes != expected_bytes) {
    return fail(ParseErrorKind::kLengthMismatch,
                "payload " + std::to_string(actual_bytes) + " bytes, header implies " +
                    std::to_string(expected_bytes));
  }
  WirePacket packet;
  packet.header = h;
  packet.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
  return packet;
}

std::uint64_t ParseErrorCounts::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

ambi::AmbisonicFrame dequantize(const WirePacket& packet, double sample_rate) {
  const PacketHeader& h = packet.header;
  const int channels = ambi::channel_count(h.order);
  const int length = h.frame_length;
  const int bytes_per_sample = h.bit_depth / 8;
  if (packet.payload.size() !=
      static_cast<std::size_t>(channels) * length * bytes_per_sample) {
    throw ShapeError("dequantize: payload does not match header");
  }
  Eigen::MatrixXd samples(channels, length);
  std::size_t at = 0;
  const int unused_bits = 32 - h.bit_depth;
  for (int c = 0; c < channels; ++c) {
    for (int i = 0; i < length; ++i) {
      std::uint32_t word = 0;
      for (int b = 0; b < bytes_per_sample; ++b) {
        word = (word << 8) | packet.payload[at++];
      }
      // Sign-extend from the sample width.
      const auto q = static_cast<std::int32_t>(word << unused_bits) >> unused_bits;
      samples(c, i) = dequantize_sample(q, h.bit_depth);
    }
  }
  return ambi::AmbisonicFrame(h.order, std::move(samples), sample_rate,
                              static_cast<std::int64_t>(h.timestamp));
}

int sequence_delta(std::uint16_t a, std::uint16_t b) {
  return static_cast<int>(static_cast<std::int16_t>(
      static_cast<std::uint16_t>(a - b)));
}

}  // namespace hoa::wire
