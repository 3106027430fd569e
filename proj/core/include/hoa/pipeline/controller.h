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

#ifndef HOA_PIPELINE_CONTROLLER_H_
#define HOA_PIPELINE_CONTROLLER_H_

#include <cstdint>
#include <limits>
#include <optional>

namespace hoa::pipeline {

struct ControllerConfig {
  int max_order = 3;
  double threshold_bps = 2e6;
  // R_max = C_A clamped to [floor, ceiling] while below threshold.
  double r_max_floor_bps = 0.0;
  double r_max_ceiling_bps = std::numeric_limits<double>::infinity();
  double sample_rate = 48000.0;
  int frame_length = 128;
  int bit_depth = 16;
  double hysteresis_hold_s = 2.0;
  double fade_duration_s = 0.0;  // 0 selects instantaneous switching
  // Fixed-order operation: adaptation disabled.
  std::optional<int> forced_order;

  double packet_interval() const { return frame_length / sample_rate; }
  std::int64_t fade_duration_samples() const;
  // Throws DomainError on inconsistent values.
  void validate() const;
};

// Outcome of one controller step, describing the packet about to be sent.
struct TickDecision {
  int order = 0;            // order of the packet payload
  int pending_order = 0;    // equal to `order` unless fading
  bool order_changed = false;
  bool fade_active = false;
  bool fade_started = false;
  bool fade_completed = false;
  std::int64_t fade_offset = 0;      // samples into the fade at column 0
  std::uint16_t fade_remaining = 0;  // samples left at column 0
  // Below threshold on this tick; `r_max` and `target` are then set.
  bool constrained = false;
  double r_max = 0.0;
  int target = 0;
  bool starved = false;
  bool stepped_up = false;
};

// Sender-side adaptation state machine, stepped once per packet interval.
//
// Down: when C_A < threshold the target order is select_order(R_max). With
// T_f = 0 the packet on this tick already carries it. Otherwise a fade starts
// on this tick; full-order packets are faded until T_f samples have elapsed
// and the first packet past the end is truncated. Further reductions wait
// for the running fade to finish.
//
// Up: after C_A has stayed at or above the threshold for hysteresis_hold, the
// order rises by one and the hold restarts, never above select_order(C_A).
class AdaptationController {
 public:
  explicit AdaptationController(ControllerConfig config);

  TickDecision tick(std::optional<double> c_a, double now);

  const ControllerConfig& config() const { return config_; }
  int current_order() const { return current_order_; }
  bool fade_active() const { return fade_active_; }
  int pending_order() const { return pending_order_; }
  std::int64_t fade_elapsed() const { return fade_elapsed_; }
  std::uint64_t starvation_count() const { return starvation_count_; }

 private:
  double clamp_r_max(double c_a) const;

  ControllerConfig config_;
  int current_order_;
  int pending_order_;
  bool fade_active_ = false;
  std::int64_t fade_elapsed_ = 0;
  std::optional<double> above_since_;
  std::uint64_t starvation_count_ = 0;
};

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_CONTROLLER_H_
