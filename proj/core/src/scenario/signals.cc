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

#include "hoa/scenario/signals.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hoa/error.h"
#include "hoa/netsim/rng.h"
#include "hoa/scenario/wav.h"

namespace hoa::scenario {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRampSeconds = 0.005;
constexpr double kButterworthQ = 1.0 / std::numbers::sqrt2;

// RBJ cookbook biquad, direct form I.
class Biquad {
 public:
  static Biquad lowpass(double cutoff, double sample_rate) {
    return make(cutoff, sample_rate, /*highpass=*/false);
  }
  static Biquad highpass(double cutoff, double sample_rate) {
    return make(cutoff, sample_rate, /*highpass=*/true);
  }

  double process(double x) {
    const double y = b0_ * x + b1_ * x1_ + b2_ * x2_ - a1_ * y1_ - a2_ * y2_;
    x2_ = x1_;
    x1_ = x;
    y2_ = y1_;
    y1_ = y;
    return y;
  }

 private:
  static Biquad make(double cutoff, double sample_rate, bool highpass) {
    const double w0 = kTwoPi * cutoff / sample_rate;
    const double alpha = std::sin(w0) / (2.0 * kButterworthQ);
    const double cos_w0 = std::cos(w0);
    const double a0 = 1.0 + alpha;
    Biquad f;
    if (highpass) {
      f.b0_ = (1.0 + cos_w0) / 2.0 / a0;
      f.b1_ = -(1.0 + cos_w0) / a0;
    } else {
      f.b0_ = (1.0 - cos_w0) / 2.0 / a0;
      f.b1_ = (1.0 - cos_w0) / a0;
    }
    f.b2_ = f.b0_;
    f.a1_ = -2.0 * cos_w0 / a0;
    f.a2_ = (1.0 - alpha) / a0;
    return f;
  }

  double b0_ = 1, b1_ = 0, b2_ = 0, a1_ = 0, a2_ = 0;
  double x1_ = 0, x2_ = 0, y1_ = 0, y2_ = 0;
};

void normalize_peak(std::vector<double>& x, double amplitude) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return;
  const double gain = amplitude / peak;
  for (double& v : x) v = std::clamp(v * gain, -amplitude, amplitude);
}

}  // namespace

std::vector<double> sine(double frequency_hz, double amplitude,
                         double sample_rate, std::int64_t length) {
  std::vector<double> out(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) {
    out[i] = amplitude * std::sin(kTwoPi * frequency_hz *
                                  static_cast<double>(i) / sample_rate);
  }
  return out;
}

std::vector<double> noise_burst(double low_hz, double high_hz, double burst_s,
                                double gap_s, double amplitude,
                                double sample_rate, std::int64_t length,
                                std::uint64_t seed) {
  netsim::SplitMix64 rng = netsim::make_stream(seed, 0x6E6F697365ULL);
  Biquad hp = Biquad::highpass(low_hz, sample_rate);
  Biquad lp = Biquad::lowpass(high_hz, sample_rate);
  const auto burst = static_cast<std::int64_t>(std::llround(burst_s * sample_rate));
  const auto gap = static_cast<std::int64_t>(std::llround(gap_s * sample_rate));
  const auto ramp = std::min<std::int64_t>(
      std::llround(kRampSeconds * sample_rate), std::max<std::int64_t>(burst / 2, 1));
  const std::int64_t period = burst + gap;

  std::vector<double> out(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) {
    const double white = 2.0 * rng.uniform() - 1.0;
    const double band = lp.process(hp.process(white));
    const std::int64_t phase = period > 0 ? i % period : i;
    double gate = 0.0;
    if (phase < burst) {
      gate = 1.0;
      const std::int64_t edge = std::min(phase, burst - 1 - phase);
      if (edge < ramp) {
        gate = 0.5 * (1.0 - std::cos(std::numbers::pi *
                                     static_cast<double>(edge) / ramp));
      }
    }
    out[i] = band * gate;
  }
  normalize_peak(out, amplitude);
  return out;
}

std::vector<double> exp_sweep(double start_hz, double end_hz, double sweep_s,
                              double amplitude, double sample_rate,
                              std::int64_t length) {
  std::vector<double> out(static_cast<std::size_t>(length), 0.0);
  const double rate = std::log(end_hz / start_hz);
  const auto sweep_length = std::min<std::int64_t>(
      length, std::llround(sweep_s * sample_rate));
  const auto ramp = std::min<std::int64_t>(
      std::llround(kRampSeconds * sample_rate), sweep_length / 2);
  for (std::int64_t i = 0; i < sweep_length; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    const double phase =
        kTwoPi * start_hz * sweep_s / rate * (std::exp(t * rate / sweep_s) - 1.0);
    double gain = amplitude;
    const std::int64_t edge = std::min(i, sweep_length - 1 - i);
    if (edge < ramp) {
      gain *= 0.5 * (1.0 - std::cos(std::numbers::pi *
                                    static_cast<double>(edge) / ramp));
    }
    out[i] = gain * std::sin(phase);
  }
  return out;
}

std::vector<double> make_signal(const SignalSpec& spec, double sample_rate,
                                std::int64_t length, std::uint64_t seed) {
  switch (spec.kind) {
    case SignalSpec::Kind::kSine:
      return sine(spec.frequency_hz, spec.amplitude, sample_rate, length);
    case SignalSpec::Kind::kNoiseBurst:
      return noise_burst(spec.low_hz, spec.high_hz, spec.burst_s, spec.gap_s,
                         spec.amplitude, sample_rate, length, seed);
    case SignalSpec::Kind::kExpSweep: {
      const double sweep_s =
          spec.sweep_s > 0.0 ? spec.sweep_s : static_cast<double>(length) / sample_rate;
      return exp_sweep(spec.start_hz, spec.end_hz, sweep_s, spec.amplitude,
                       sample_rate, length);
    }
    case SignalSpec::Kind::kFile: {
      WavData wav;
      try {
        wav = read_wav(spec.path);
      } catch (const std::exception& e) {
        throw ConfigError("signal.path", e.what());
      }
      if (wav.sample_rate != static_cast<int>(sample_rate)) {
        throw ConfigError("signal.path",
                          "sample rate " + std::to_string(wav.sample_rate) +
                              " differs from the scene rate");
      }
      std::vector<double> out(static_cast<std::size_t>(length), 0.0);
      const std::int64_t n = std::min<std::int64_t>(length, wav.samples.cols());
      for (std::int64_t i = 0; i < n; ++i) {
        out[i] = wav.samples.col(i).mean();
      }
      normalize_peak(out, spec.amplitude);
      return out;
    }
  }
  return {};
}

}  // namespace hoa::scenario
