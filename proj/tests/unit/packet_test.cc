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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hoa/error.h"

namespace hoa::wire {
namespace {

using ambi::AmbisonicFrame;

AmbisonicFrame random_frame(std::mt19937_64& rng, int order, int length,
                            std::int64_t start) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd m(ambi::channel_count(order), length);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
  return AmbisonicFrame(order, m, 48000.0, start);
}

TEST(PayloadSize, Examples) {
  EXPECT_EQ(payload_size(1, 16, 128), 8192u);
  EXPECT_EQ(payload_size(0, 16, 128), 2048u);
  EXPECT_EQ(payload_size(3, 16, 128), 32768u);
  EXPECT_EQ(payload_size(1, 16, 128) / 8, 1024u);
}

TEST(PayloadSize, PerChannelDepths) {
  const std::vector<int> depths = {32, 16, 16, 16};
  EXPECT_EQ(payload_size(depths, 10), (32u + 48u) * 10u);
  EXPECT_THROW(payload_size(std::vector<int>{12}, 10), DomainError);
}

TEST(PayloadSize, RejectsBadArguments) {
  EXPECT_THROW(payload_size(-1, 16, 128), DomainError);
  EXPECT_THROW(payload_size(1, 20, 128), DomainError);
  EXPECT_THROW(payload_size(1, 16, 0), DomainError);
}

TEST(Quantize, FullScaleAndRounding) {
  EXPECT_EQ(quantize_sample(1.0, 16, nullptr), 0x7FFF);
  EXPECT_EQ(quantize_sample(-1.0, 16, nullptr), -32768);
  EXPECT_EQ(quantize_sample(0.5 / 32768.0, 16, nullptr), 1);  // half away from zero
  EXPECT_EQ(quantize_sample(-0.5 / 32768.0, 16, nullptr), -1);
  EXPECT_EQ(quantize_sample(1.0, 24, nullptr), (1 << 23) - 1);
  EXPECT_EQ(quantize_sample(-1.0, 32, nullptr), std::numeric_limits<std::int32_t>::min());
  bool over = false;
  EXPECT_EQ(quantize_sample(1.0, 16, &over), 0x7FFF);
  EXPECT_FALSE(over);
  EXPECT_EQ(quantize_sample(1.7, 16, &over), 0x7FFF);
  EXPECT_TRUE(over);
  EXPECT_NEAR(dequantize_sample(0x7FFF, 16), 32767.0 / 32768.0, 0.0);
  EXPECT_NEAR(dequantize_sample(0x7FFF, 16), 0.99997, 1e-5);
}

TEST(Encapsulate, ZeroFrame) {
  const WirePacket p =
      encapsulate(AmbisonicFrame::zeros(1, 128, 48000.0, 0), 0, 0, {});
  EXPECT_EQ(p.header.sequence, 0);
  EXPECT_EQ(p.header.order, 1);
  EXPECT_EQ(p.payload.size(), 1024u);
  for (std::uint8_t b : p.payload) EXPECT_EQ(b, 0);
}

TEST(Encapsulate, FullScaleWordIsBigEndian) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(1, 2);
  m(0, 0) = 1.0;
  const WirePacket p = encapsulate(AmbisonicFrame(0, m, 48000.0, 0), 0, 0, {});
  EXPECT_EQ(p.payload[0], 0x7F);
  EXPECT_EQ(p.payload[1], 0xFF);
}

TEST(Encapsulate, OverflowPolicy) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(1, 3);
  m(0, 1) = 1.2;
  m(0, 2) = -1.0;  // exactly full scale is representable
  QuantizeStats stats;
  encapsulate(AmbisonicFrame(0, m, 48000.0, 0), 0, 0, {}, {}, &stats);
  EXPECT_EQ(stats.clamped, 1u);
  EXPECT_THROW(encapsulate(AmbisonicFrame(0, m, 48000.0, 0), 0, 0, {},
                           {16, OverflowPolicy::kError}),
               OverflowError);
}

TEST(Encapsulate, HeaderFields) {
  std::mt19937_64 rng(2);
  const AmbisonicFrame f = random_frame(rng, 2, 64, (std::int64_t{1} << 32) + 5);
  const WirePacket p = encapsulate(f, 0xBEEF, 321, {true, true}, {24});
  EXPECT_EQ(p.header.timestamp, 5u);  // mod 2^32
  EXPECT_EQ(p.header.bit_depth, 24);
  EXPECT_EQ(p.header.frame_length, 64);
  EXPECT_EQ(p.header.fade_remaining, 321);
  const std::vector<std::uint8_t> bytes = serialize(p);
  ASSERT_EQ(bytes.size(), 16u + 9 * 64 * 3);
  EXPECT_EQ(bytes[0], 'H');
  EXPECT_EQ(bytes[1], 'A');
  EXPECT_EQ(bytes[2], 1);
  EXPECT_EQ(bytes[3], 0x03);
  EXPECT_EQ(bytes[4], 0xBE);
  EXPECT_EQ(bytes[5], 0xEF);
  EXPECT_EQ(bytes[9], 5);
  EXPECT_EQ(bytes[10], 2);
  EXPECT_EQ(bytes[11], 24);
  EXPECT_EQ(bytes[13], 64);
  EXPECT_EQ((bytes[14] << 8) | bytes[15], 321);
}

TEST(RoundTrip, RandomizedFramesWithinOneStep) {
  std::mt19937_64 rng(11);
  for (int order = 0; order <= 3; ++order) {
    for (int depth : {16, 24, 32}) {
      for (int length : {64, 128, 256}) {
        const AmbisonicFrame f = random_frame(rng, order, length, 4096);
        const std::vector<std::uint8_t> bytes =
            serialize(encapsulate(f, 9, 0, {}, {depth}));
        EXPECT_EQ(bytes.size() * 8, 128 + payload_size(order, depth, length));
        const ParseResult r = parse_packet(bytes);
        ASSERT_TRUE(r.ok());
        const AmbisonicFrame g = dequantize(r.packet(), 48000.0);
        EXPECT_EQ(g.order(), order);
        EXPECT_EQ(g.start_index(), 4096);
        // Rounding to nearest keeps the error within half a step.
        EXPECT_LE((g.samples() - f.samples()).cwiseAbs().maxCoeff(),
                  std::ldexp(1.0, -depth));
        EXPECT_EQ(serialize(r.packet()), bytes);
      }
    }
  }
}

TEST(RoundTrip, DequantizeAllZero) {
  const WirePacket p = encapsulate(AmbisonicFrame::zeros(3, 16, 48000.0, 0), 1, 0, {});
  EXPECT_EQ(dequantize(p, 48000.0).samples().cwiseAbs().maxCoeff(), 0.0);
}

TEST(RoundTrip, NegativeValuesSignExtend) {
  for (int depth : {16, 24, 32}) {
    Eigen::MatrixXd m(1, 3);
    m << -1.0, -std::ldexp(1.0, -(depth - 1)), -0.25;
    const WirePacket p = encapsulate(AmbisonicFrame(0, m, 48000.0, 0), 0, 0, {}, {depth});
    EXPECT_EQ(dequantize(p, 48000.0).samples(), m);
  }
}

std::vector<std::uint8_t> valid_bytes() {
  return serialize(encapsulate(AmbisonicFrame::zeros(1, 8, 48000.0, 0), 1, 0, {}));
}

TEST(Parse, Errors) {
  std::vector<std::uint8_t> b = valid_bytes();
  EXPECT_EQ(parse_packet(std::span(b).first(15)).error().kind,
            ParseErrorKind::kTruncatedHeader);
  auto with = [&](std::size_t at, std::uint8_t v) {
    std::vector<std::uint8_t> c = b;
    c[at] = v;
    return parse_packet(c);
  };
  EXPECT_EQ(with(0, 'X').error().kind, ParseErrorKind::kBadMagic);
  EXPECT_EQ(with(2, 2).error().kind, ParseErrorKind::kBadVersion);
  EXPECT_EQ(with(3, 0x04).error().kind, ParseErrorKind::kReservedFlags);
  EXPECT_EQ(with(10, 16).error().kind, ParseErrorKind::kBadOrder);
  EXPECT_EQ(with(11, 8).error().kind, ParseErrorKind::kBadBitDepth);
  std::vector<std::uint8_t> zero_len = b;
  zero_len[12] = zero_len[13] = 0;
  EXPECT_EQ(parse_packet(zero_len).error().kind, ParseErrorKind::kBadFrameLength);
  b.push_back(0);
  EXPECT_EQ(parse_packet(b).error().kind, ParseErrorKind::kLengthMismatch);
}

TEST(Parse, OrderThreeHeaderWithOrderOnePayload) {
  // Order-1 payload at 16 bits x 128 is 1024 bytes; order 3 needs 4096.
  std::vector<std::uint8_t> b =
      serialize(encapsulate(AmbisonicFrame::zeros(1, 128, 48000.0, 0), 0, 0, {}));
  ASSERT_EQ(b.size(), 16u + payload_size(1, 16, 128) / 8);
  b[10] = 3;
  const ParseResult r = parse_packet(b);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, ParseErrorKind::kLengthMismatch);
  EXPECT_STREQ(to_string(r.error().kind), "length_mismatch");
}

TEST(Parse, FuzzNeverThrowsAndAcceptedInputsRoundTrip) {
  std::mt19937_64 rng(99);
  const std::vector<std::uint8_t> base = valid_bytes();
  for (int i = 0; i < 20000; ++i) {
    std::vector<std::uint8_t> b;
    if (i % 2) {
      b.resize(rng() % 64);
      for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    } else {
      b = base;
      b[rng() % b.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
    }
    ParseResult r = parse_packet(b);
    if (r.ok()) EXPECT_EQ(serialize(r.packet()), b);
  }
}

TEST(ParseErrorCounts, Tally) {
  ParseErrorCounts counts;
  counts.record(ParseErrorKind::kBadMagic);
  counts.record(ParseErrorKind::kBadMagic);
  counts.record(ParseErrorKind::kLengthMismatch);
  EXPECT_EQ(counts.count(ParseErrorKind::kBadMagic), 2u);
  EXPECT_EQ(counts.total(), 3u);
}

TEST(Sequence, DeltaWraps) {
  EXPECT_EQ(sequence_delta(5, 3), 2);
  EXPECT_EQ(sequence_delta(3, 5), -2);
  EXPECT_EQ(sequence_delta(0, 65535), 1);
  EXPECT_EQ(sequence_delta(65535, 0), -1);
  EXPECT_EQ(sequence_delta(32767, 0), 32767);
  EXPECT_EQ(sequence_delta(32768, 0), -32768);
}

}  // namespace
}  // namespace hoa::wire
