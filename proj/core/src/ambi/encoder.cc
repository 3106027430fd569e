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

#include "hoa/ambi/encoder.h"

#include <cmath>
#include <string>
#include <utility>

#include "hoa/ambi/spherical_harmonics.h"
#include "hoa/error.h"

namespace hoa::ambi {

SourceSignal::SourceSignal(std::vector<double> samples, double sample_rate,
                           Trajectory trajectory)
    : samples_(std::move(samples)),
      sample_rate_(sample_rate),
      trajectory_(std::move(trajectory)) {
  if (!(sample_rate_ > 0.0)) {
    throw DomainError("SourceSignal: sample rate must be positive");
  }
  if (!trajectory_) throw DomainError("SourceSignal: missing trajectory");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!(std::abs(samples_[i]) <= 1.0)) {
      throw DomainError("SourceSignal: sample " + std::to_string(i) +
                        " exceeds full scale");
    }
  }
}

SourceSignal SourceSignal::fixed(std::vector<double> samples,
                                 double sample_rate, Direction direction) {
  return SourceSignal(std::move(samples), sample_rate,
                      [direction](std::int64_t) { return direction; });
}

AmbisonicFrame encode_capsules(const Eigen::MatrixXd& pressures,
                               const CapsuleArray& array, int order,
                               double sample_rate, std::int64_t start_index) {
  if (order < 0 || order > array.order_limit()) {
    throw OrderError("encode_capsules: order " + std::to_string(order) +
                     " exceeds array limit " +
                     std::to_string(array.order_limit()));
  }
  if (pressures.rows() != array.count()) {
    throw ShapeError("encode_capsules: " + std::to_string(pressures.rows()) +
                     " pressure rows for " + std::to_string(array.count()) +
                     " capsules");
  }
  const int channels = channel_count(order);
  // Encoding matrix E(c, q) = w_q Y_c(d_q).
  Eigen::MatrixXd encoding(channels, array.count());
  std::vector<double> basis(channels);
  for (int q = 0; q < array.count(); ++q) {
    sh_eval_all(order, array.directions()[q], basis);
    for (int c = 0; c < channels; ++c) {
      encoding(c, q) = array.weights()[q] * basis[c];
    }
  }
  return AmbisonicFrame(order, encoding * pressures, sample_rate, start_index);
}

AmbisonicFrame encode_plane_wave(const SourceSignal& source, int order,
                                 std::int64_t start_index, int frame_length) {
  if (frame_length < 1 || start_index < 0 ||
      start_index + frame_length > source.length()) {
    throw RangeError("encode_plane_wave: window [" +
                     std::to_string(start_index) + ", " +
                     std::to_string(start_index + frame_length) +
                     ") exceeds source length " +
                     std::to_string(source.length()));
  }
  const int channels = channel_count(order);
  Eigen::MatrixXd samples(channels, frame_length);
  std::vector<double> basis(channels);
  Direction previous;
  bool have_previous = false;
  for (int i = 0; i < frame_length; ++i) {
    const std::int64_t t = start_index + i;
    const Direction dir = source.direction_at(t);
    if (!have_previous || dir.azimuth() != previous.azimuth() ||
        dir.colatitude() != previous.colatitude()) {
      sh_eval_all(order, dir, basis);
      previous = dir;
      have_previous = true;
    }
    const double s = source.samples()[static_cast<std::size_t>(t)];
    for (int c = 0; c < channels; ++c) samples(c, i) = s * basis[c];
  }
  return AmbisonicFrame(order, std::move(samples), source.sample_rate(),
                        start_index);
}

AmbisonicFrame encode_plane_waves(std::span<const SourceSignal> sources,
                                  int order, std::int64_t start_index,
                                  int frame_length) {
  if (sources.empty()) throw ShapeError("encode_plane_waves: no sources");
  AmbisonicFrame mix =
      encode_plane_wave(sources[0], order, start_index, frame_length);
  for (std::size_t k = 1; k < sources.size(); ++k) {
    if (sources[k].sample_rate() != mix.sample_rate()) {
      throw ShapeError("encode_plane_waves: sample rate mismatch");
    }
    mix.mutable_samples() +=
        encode_plane_wave(sources[k], order, start_index, frame_length)
            .samples();
  }
  return mix;
}

}  // namespace hoa::ambi
