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

#include "hoa/scenario/wav.h"

#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "hoa/error.h"
#include "hoa/wire/packet.h"

namespace hoa::scenario {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;
// KSDATAFORMAT_SUBTYPE_PCM / _IEEE_FLOAT share the tail after the first 2 bytes.
constexpr std::uint8_t kSubformatTail[14] = {0x00, 0x00, 0x00, 0x00, 0x10, 0x00, 0x80,
                                             0x00, 0x00, 0xAA, 0x00, 0x38, 0x9B, 0x71};

void put_u16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  put_u16(out, v & 0xFFFF);
  put_u16(out, v >> 16);
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::uint32_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return b[at] | (b[at + 1] << 8);
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return get_u16(b, at) | (get_u16(b, at + 2) << 16);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

}  // namespace

std::vector<std::uint8_t> encode_wav(const Eigen::MatrixXd& samples,
                                     int sample_rate, int bit_depth,
                                     std::size_t* clamped) {
  if (!wire::is_supported_bit_depth(bit_depth)) {
    throw DomainError("encode_wav: unsupported bit depth");
  }
  if (samples.rows() < 1) throw ShapeError("encode_wav: no channels");
  const auto channels = static_cast<std::uint32_t>(samples.rows());
  const auto frames = static_cast<std::uint64_t>(samples.cols());
  const std::uint32_t bytes_per_sample = bit_depth / 8;
  const std::uint64_t data_size = frames * channels * bytes_per_sample;
  if (data_size > 0xFFFFFFFFull - 80) {
    throw DomainError("encode_wav: data exceeds the RIFF size limit");
  }
  const bool extensible = channels > 2 || bit_depth > 16;
  const std::uint32_t fmt_size = extensible ? 40 : 16;

  std::vector<std::uint8_t> out;
  out.reserve(12 + 8 + fmt_size + 8 + data_size + 1);
  put_tag(out, "RIFF");
  put_u32(out, static_cast<std::uint32_t>(4 + 8 + fmt_size + 8 + data_size +
                                          (data_size & 1)));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, fmt_size);
  put_u16(out, extensible ? kFormatExtensible : kFormatPcm);
  put_u16(out, channels);
  put_u32(out, static_cast<std::uint32_t>(sample_rate));
  put_u32(out, static_cast<std::uint32_t>(sample_rate) * channels * bytes_per_sample);
  put_u16(out, channels * bytes_per_sample);
  put_u16(out, static_cast<std::uint32_t>(bit_depth));
  if (extensible) {
    put_u16(out, 22);
    put_u16(out, static_cast<std::uint32_t>(bit_depth));  // valid bits
    put_u32(out, 0);  // no speaker-position mask: channels are ACN or custom
    put_u16(out, kFormatPcm);
    out.insert(out.end(), std::begin(kSubformatTail), std::end(kSubformatTail));
  }
  put_tag(out, "data");
  put_u32(out, static_cast<std::uint32_t>(data_size));

  std::size_t clamp_count = 0;
  for (Eigen::Index i = 0; i < samples.cols(); ++i) {
    for (Eigen::Index c = 0; c < samples.rows(); ++c) {
      bool out_of_range = false;
      const auto word = static_cast<std::uint32_t>(
          wire::quantize_sample(samples(c, i), bit_depth, &out_of_range));
      if (out_of_range) ++clamp_count;
      for (std::uint32_t b = 0; b < bytes_per_sample; ++b) {
        out.push_back(static_cast<std::uint8_t>(word >> (8 * b)));
      }
    }
  }
  if (data_size & 1) out.push_back(0);
  if (clamped != nullptr) *clamped = clamp_count;
  return out;
}

WavData decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE")) {
    throw FormatError("not a RIFF/WAVE file");
  }
  std::uint32_t format = 0;
  std::uint32_t channels = 0;
  std::uint32_t bits = 0;
  WavData wav;
  std::span<const std::uint8_t> data;
  bool have_fmt = false;
  bool have_data = false;
  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    const std::uint32_t size = get_u32(bytes, at + 4);
    const std::size_t body = at + 8;
    if (size > bytes.size() - body) throw FormatError("chunk runs past end of file");
    if (tag_is(bytes, at, "fmt ")) {
      if (size < 16) throw FormatError("fmt chunk too short");
      format = get_u16(bytes, body);
      channels = get_u16(bytes, body + 2);
      wav.sample_rate = static_cast<int>(get_u32(bytes, body + 4));
      bits = get_u16(bytes, body + 14);
      if (format == kFormatExtensible) {
        if (size < 40) throw FormatError("extensible fmt chunk too short");
        if (std::memcmp(bytes.data() + body + 26, kSubformatTail, 14) != 0) {
          throw FormatError("unknown extensible subformat");
        }
        format = get_u16(bytes, body + 24);
      }
      have_fmt = true;
    } else if (tag_is(bytes, at, "data")) {
      data = bytes.subspan(body, size);
      have_data = true;
    }
    at = body + size + (size & 1);
  }
  if (!have_fmt || !have_data) throw FormatError("missing fmt or data chunk");
  if (channels == 0) throw FormatError("zero channels");
  const bool pcm = format == kFormatPcm &&
                   (bits == 8 || bits == 16 || bits == 24 || bits == 32);
  const bool fp = format == kFormatFloat && (bits == 32 || bits == 64);
  if (!pcm && !fp) {
    throw FormatError("unsupported sample format " + std::to_string(format) +
                      " / " + std::to_string(bits) + " bits");
  }
  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frames = data.size() / (bytes_per_sample * channels);
  wav.bit_depth = static_cast<int>(bits);
  wav.samples.resize(channels, static_cast<Eigen::Index>(frames));
  std::size_t pos = 0;
  for (std::size_t i = 0; i < frames; ++i) {
    for (std::uint32_t c = 0; c < channels; ++c) {
      std::uint64_t word = 0;
      for (std::size_t b = 0; b < bytes_per_sample; ++b) {
        word |= static_cast<std::uint64_t>(data[pos + b]) << (8 * b);
      }
      pos += bytes_per_sample;
      double value;
      if (fp && bits == 32) {
        float f;
        const auto w32 = static_cast<std::uint32_t>(word);
        std::memcpy(&f, &w32, 4);
        value = f;
      } else if (fp) {
        std::memcpy(&value, &word, 8);
      } else if (bits == 8) {
        value = (static_cast<double>(word) - 128.0) / 128.0;
      } else {
        const int shift = 64 - static_cast<int>(bits);
        const auto q = static_cast<std::int64_t>(word << shift) >> shift;
        value = wire::dequantize_sample(static_cast<std::int32_t>(q),
                                        static_cast<int>(bits));
      }
      wav.samples(c, static_cast<Eigen::Index>(i)) = value;
    }
  }
  return wav;
}

void write_wav(const std::filesystem::path& path, const Eigen::MatrixXd& samples,
               int sample_rate, int bit_depth, std::size_t* clamped) {
  const std::vector<std::uint8_t> bytes =
      encode_wav(samples, sample_rate, bit_depth, clamped);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

WavData read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_wav(bytes);
}

}  // namespace hoa::scenario
