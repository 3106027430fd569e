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

#include "hoa/scenario/scene.h"

#include <algorithm>

#include "hoa/scenario/signals.h"

namespace hoa::scenario {

ambi::Trajectory make_trajectory(const TrajectorySpec& spec, double sample_rate,
                                 double scene_duration_s) {
  const double duration =
      spec.duration_s > 0.0 ? spec.duration_s : scene_duration_s;
  const double span_samples = duration * sample_rate;
  const auto lerp = [from = spec.from_deg, to = spec.to_deg,
                     span_samples](std::int64_t i) {
    const double t = std::min(static_cast<double>(i) / span_samples, 1.0);
    return (1.0 - t) * from + t * to;
  };
  switch (spec.kind) {
    case TrajectorySpec::Kind::kStatic: {
      const ambi::Direction d = ambi::Direction::from_azimuth_elevation_deg(
          spec.azimuth_deg, spec.elevation_deg);
      return [d](std::int64_t) { return d; };
    }
    case TrajectorySpec::Kind::kAzimuthSweep:
      return [lerp, el = spec.elevation_deg](std::int64_t i) {
        return ambi::Direction::from_azimuth_elevation_deg(lerp(i), el);
      };
    case TrajectorySpec::Kind::kElevationSweep:
      return [lerp, az = spec.azimuth_deg](std::int64_t i) {
        return ambi::Direction::from_azimuth_elevation_deg(az, lerp(i));
      };
  }
  return {};
}

std::vector<ambi::SourceSignal> build_scene(const ScenarioConfig& config) {
  std::vector<ambi::SourceSignal> sources;
  sources.reserve(config.sources.size());
  const std::int64_t length = config.total_samples();
  for (std::size_t i = 0; i < config.sources.size(); ++i) {
    const SourceSpec& spec = config.sources[i];
    sources.emplace_back(
        make_signal(spec.signal, config.sample_rate, length, config.seed + i),
        config.sample_rate,
        make_trajectory(spec.trajectory, config.sample_rate, config.duration_s));
  }
  return sources;
}

}  // namespace hoa::scenario
