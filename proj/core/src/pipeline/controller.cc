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

#include "hoa/pipeline/controller.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hoa/error.h"
#include "hoa/pipeline/order_selection.h"
#include "hoa/wire/packet.h"

namespace hoa::pipeline {
namespace {

constexpr double kTimeEpsilon = 1e-9;

}  // namespace

std::int64_t ControllerConfig::fade_duration_samples() const {
  return std::llround(fade_duration_s * sample_rate);
}

void ControllerConfig::validate() const {
  if (max_order < 0 || max_order > wire::kMaxWireOrder) {
    throw DomainError("controller: max order outside [0, 15]");
  }
  if (!(sample_rate > 0.0)) throw DomainError("controller: sample rate <= 0");
  if (frame_length < 1 || frame_length > 0xFFFF) {
    throw DomainError("controller: frame length outside [1, 65535]");
  }
  if (!wire::is_supported_bit_depth(bit_depth)) {
    throw DomainError("controller: unsupported bit depth");
  }
  if (!(threshold_bps >= 0.0)) throw DomainError("controller: threshold < 0");
  if (!(r_max_floor_bps >= 0.0) || r_max_ceiling_bps < r_max_floor_bps) {
    throw DomainError("controller: R_max floor/ceiling inconsistent");
  }
  if (!(hysteresis_hold_s >= 0.0)) throw DomainError("controller: hold < 0");
  if (!(fade_duration_s >= 0.0) || fade_duration_samples() > 0xFFFF) {
    throw DomainError("controller: fade duration outside [0, 65535] samples");
  }
  if (forced_order && (*forced_order < 0 || *forced_order > max_order)) {
    throw DomainError("controller: forced order outside [0, max order]");
  }
}

AdaptationController::AdaptationController(ControllerConfig config)
    : config_(std::move(config)) {
  config_.validate();
  current_order_ = config_.forced_order.value_or(config_.max_order);
  pending_order_ = current_order_;
}

double AdaptationController::clamp_r_max(double c_a) const {
  return std::clamp(c_a, config_.r_max_floor_bps, config_.r_max_ceiling_bps);
}

TickDecision AdaptationController::tick(std::optional<double> c_a, double now) {
  TickDecision d;
  if (config_.forced_order) {
    d.order = d.pending_order = current_order_;
    return d;
  }
  const auto select = [&](double r_max) {
    // A zero estimate still has to select something; treat it as starvation.
    if (!(r_max > 0.0)) return OrderSelection{0, true};
    return select_order(r_max, config_.packet_interval(), config_.bit_depth,
                        config_.frame_length, config_.max_order);
  };

  if (c_a && *c_a < config_.threshold_bps) {
    above_since_.reset();
    d.constrained = true;
    d.r_max = clamp_r_max(*c_a);
    const OrderSelection selection = select(d.r_max);
    d.target = selection.order;
    d.starved = selection.starved;
    if (selection.starved) ++starvation_count_;
    if (!fade_active_ && d.target < current_order_) {
      if (config_.fade_duration_samples() == 0) {
        current_order_ = d.target;
        pending_order_ = d.target;
        d.order_changed = true;
      } else {
        fade_active_ = true;
        pending_order_ = d.target;
        fade_elapsed_ = 0;
        d.fade_started = true;
      }
    }
  } else if (c_a) {
    if (!above_since_) above_since_ = now;
    if (!fade_active_ && current_order_ < config_.max_order &&
        now - *above_since_ >= config_.hysteresis_hold_s - kTimeEpsilon) {
      const int cap = select(clamp_r_max(*c_a)).order;
      if (current_order_ < cap) {
        ++current_order_;
        pending_order_ = current_order_;
        d.order_changed = true;
        d.stepped_up = true;
        above_since_ = now;
      }
    }
  }

  if (fade_active_) {
    const std::int64_t total = config_.fade_duration_samples();
    if (fade_elapsed_ >= total) {
      fade_active_ = false;
      current_order_ = pending_order_;
      d.fade_completed = true;
      d.order_changed = true;
    } else {
      d.fade_active = true;
      d.fade_offset = fade_elapsed_;
      d.fade_remaining = static_cast<std::uint16_t>(total - fade_elapsed_);
      fade_elapsed_ += config_.frame_length;
    }
  }
  d.order = current_order_;
  d.pending_order = pending_order_;
  return d;
}

}  // namespace hoa::pipeline
