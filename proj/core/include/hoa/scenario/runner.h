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

#ifndef HOA_SCENARIO_RUNNER_H_
#define HOA_SCENARIO_RUNNER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hoa/ambi/encoder.h"
#include "hoa/ambi/loudspeaker_layout.h"
#include "hoa/netsim/link.h"
#include "hoa/pipeline/controller.h"
#include "hoa/scenario/capture.h"
#include "hoa/scenario/config.h"
#include "hoa/scenario/trace.h"

namespace hoa::scenario {

// Effective parameters of one stimulus condition derived from a scene config.
//
//   reference      order N fixed, link without loss or capacity schedule
//   omni           order 0 fixed, one output channel
//   first_order    order 1 fixed, four output channels
//   instantaneous  adaptive, T_f = 0, capacity drop
//   crossfade      adaptive, T_f = stimulus.fade_duration_s, capacity drop
//   corrupted      order N fixed, loss = stimulus.loss_probability, no
//                  capacity schedule
//
// The capacity drop is link.schedule when given, otherwise a single step to
// stimulus.drop.capacity_bps at stimulus.drop.time_s.
struct StimulusPlan {
  StimulusKind kind = StimulusKind::kReference;
  pipeline::ControllerConfig controller;
  netsim::LinkConfig link;
  int session_order = 0;
};

StimulusPlan plan_stimulus(const ScenarioConfig& config, StimulusKind kind);

struct SentRecord {
  std::int64_t seq = 0;
  double time = 0.0;
  std::size_t bytes = 0;
  bool admitted = false;
  pipeline::TickDecision decision;
  std::optional<double> estimate;
};

struct PlayoutRecord {
  std::int64_t seq = 0;
  double time = 0.0;
  bool concealed = false;
  int received_order = -1;
  bool fade_active = false;
};

struct StimulusResult {
  StimulusKind kind = StimulusKind::kReference;
  int session_order = 0;
  double estimator_window_s = 0.0;
  // (session_order + 1)^2 x (frames * L_F), ACN channel order.
  Eigen::MatrixXd ambisonics;
  std::vector<TraceRow> trace;
  std::vector<SentRecord> sent;
  std::vector<PlayoutRecord> playout;
  std::vector<CaptureRecord> capture;
  std::string link_events_csv;
  netsim::LinkStats link_stats;
  std::uint64_t concealed = 0;
  std::uint64_t late = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t parse_errors = 0;
  std::uint64_t clamped_samples = 0;
  std::uint64_t starvation_ticks = 0;
};

// Runs one condition over the whole scene. Each tick t_j = j * T_P:
//   1. link deliveries and playout deadlines up to t_j, in time order (a
//      delivery at the same instant as a deadline is on time);
//   2. the estimator records the link capacity available over
//      [t_{j-1}, t_j) and publishes C_A over the last whole number of packet
//      intervals that fit in adaptation.window_s;
//   3. the sender encodes frame j, the controller decides, the packet is
//      submitted.
// After the last frame is sent the loop drains until every frame has been
// played out.
StimulusResult run_stimulus(const ScenarioConfig& config, StimulusKind kind,
                            const std::vector<ambi::SourceSignal>& scene);
StimulusResult run_stimulus(const ScenarioConfig& config, StimulusKind kind);

// Layout file from the config, or the built-in design at max_order.
ambi::LoudspeakerLayout make_layout(const ScenarioConfig& config);

// Output stem "<name>_<suffix>".
std::string output_stem(const ScenarioConfig& config, StimulusKind kind);

// Writes the enabled outputs into `dir` (created if needed). Each file is
// written under a temporary name and renamed once all of them succeeded;
// on failure nothing is left behind. Returns the final paths.
std::vector<std::filesystem::path> write_outputs(
    const ScenarioConfig& config, const StimulusResult& result,
    const std::filesystem::path& dir);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_RUNNER_H_
