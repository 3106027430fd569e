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

#ifndef HOA_SCENARIO_WAV_H_
#define HOA_SCENARIO_WAV_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace hoa::scenario {

struct WavData {
  int sample_rate = 0;
  int bit_depth = 0;
  Eigen::MatrixXd samples;  // channels x frames, full scale [-1, 1)
};

// RIFF/WAVE PCM at 16, 24 or 32 bits. WAVE_FORMAT_EXTENSIBLE is used for more
// than two channels or more than 16 bits. Samples are quantized like the
// wire payload (round half away from zero, clamped); the number of samples
// with |x| > 1 is returned through `clamped` when given.
std::vector<std::uint8_t> encode_wav(const Eigen::MatrixXd& samples,
                                     int sample_rate, int bit_depth,
                                     std::size_t* clamped = nullptr);

// Accepts PCM 8/16/24/32 and IEEE float 32/64, plain or extensible. Throws
// FormatError.
WavData decode_wav(std::span<const std::uint8_t> bytes);

// Throws IoError when the file cannot be written or read.
void write_wav(const std::filesystem::path& path, const Eigen::MatrixXd& samples,
               int sample_rate, int bit_depth, std::size_t* clamped = nullptr);
WavData read_wav(const std::filesystem::path& path);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_WAV_H_
