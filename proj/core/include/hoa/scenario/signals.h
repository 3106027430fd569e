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

#ifndef HOA_SCENARIO_SIGNALS_H_
#define HOA_SCENARIO_SIGNALS_H_

#include <cstdint>
#include <vector>

#include "hoa/scenario/config.h"

namespace hoa::scenario {

// amplitude * sin(2 pi f i / fs).
std::vector<double> sine(double frequency_hz, double amplitude,
                         double sample_rate, std::int64_t length);

// Seeded white noise, band-passed to [low_hz, high_hz] with second-order
// Butterworth high- and low-pass sections, gated on/off with 5 ms
// raised-cosine ramps and normalized to a peak of `amplitude`.
std::vector<double> noise_burst(double low_hz, double high_hz, double burst_s,
                                double gap_s, double amplitude,
                                double sample_rate, std::int64_t length,
                                std::uint64_t seed);

// Exponential sine sweep from start_hz to end_hz over sweep_s seconds, then
// silence.
std::vector<double> exp_sweep(double start_hz, double end_hz, double sweep_s,
                              double amplitude, double sample_rate,
                              std::int64_t length);

// Builtin or file signal of exactly `length` samples (files are mixed down to
// mono, zero-padded or cut). Throws ConfigError on a missing file or a
// sample-rate mismatch.
std::vector<double> make_signal(const SignalSpec& spec, double sample_rate,
                                std::int64_t length, std::uint64_t seed);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_SIGNALS_H_
