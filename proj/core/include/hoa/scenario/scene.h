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

#ifndef HOA_SCENARIO_SCENE_H_
#define HOA_SCENARIO_SCENE_H_

#include <vector>

#include "hoa/ambi/encoder.h"
#include "hoa/scenario/config.h"

namespace hoa::scenario {

// Per-sample direction for a trajectory spec. Sweeps interpolate the swept
// angle as (1 - t) * from + t * to with t = min(i / (duration * fs), 1), so
// index 0 sits exactly on `from` and index duration * fs (and everything
// after it) exactly on `to`. A zero duration means the scene duration.
ambi::Trajectory make_trajectory(const TrajectorySpec& spec, double sample_rate,
                                 double scene_duration_s);

// One SourceSignal per configured source, each total_samples() long. Noise
// sources are seeded with config.seed + source index.
std::vector<ambi::SourceSignal> build_scene(const ScenarioConfig& config);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_SCENE_H_
