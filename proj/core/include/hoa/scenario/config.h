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

#ifndef HOA_SCENARIO_CONFIG_H_
#define HOA_SCENARIO_CONFIG_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoa/netsim/link.h"

namespace hoa::scenario {

inline constexpr int kSchemaVersion = 1;

enum class StimulusKind {
  kReference,
  kOmni,
  kFirstOrder,
  kInstantaneous,
  kCrossfade,
  kCorrupted,
};

inline constexpr std::array<StimulusKind, 6> kAllStimuli = {
    StimulusKind::kReference,     StimulusKind::kOmni,
    StimulusKind::kFirstOrder,    StimulusKind::kInstantaneous,
    StimulusKind::kCrossfade,     StimulusKind::kCorrupted,
};

// Config spelling: reference, omni, first_order, instantaneous, crossfade,
// corrupted.
const char* to_string(StimulusKind kind);
// ref, omni, o1, inst, fade, corr.
const char* file_suffix(StimulusKind kind);
std::optional<StimulusKind> parse_stimulus_kind(std::string_view name);

struct SignalSpec {
  enum class Kind { kSine, kNoiseBurst, kExpSweep, kFile };

  Kind kind = Kind::kSine;
  double amplitude = 0.4;
  // sine
  double frequency_hz = 440.0;
  // noise_burst: band [low_hz, high_hz], on for burst_s then off for gap_s
  double low_hz = 200.0;
  double high_hz = 4000.0;
  double burst_s = 0.5;
  double gap_s = 0.25;
  // exp_sweep: start_hz -> end_hz over sweep_s (0 = whole scene)
  double start_hz = 50.0;
  double end_hz = 8000.0;
  double sweep_s = 0.0;
  // file
  std::filesystem::path path;
};

struct TrajectorySpec {
  enum class Kind { kStatic, kAzimuthSweep, kElevationSweep };

  Kind kind = Kind::kStatic;
  double azimuth_deg = 0.0;    // static; fixed azimuth of an elevation sweep
  double elevation_deg = 0.0;  // static; fixed elevation of an azimuth sweep
  double from_deg = 0.0;
  double to_deg = 0.0;
  double duration_s = 0.0;  // 0 = whole scene
};

struct SourceSpec {
  SignalSpec signal;
  TrajectorySpec trajectory;
};

struct LinkSpec {
  double capacity_bps = 13e6;
  std::size_t queue_limit_bytes = 64 * 1024;
  double propagation_delay_s = 0.020;
  double jitter_stddev_s = 0.0;
  double loss_probability = 0.0;
  std::vector<netsim::CapacityStep> schedule;
};

struct AdaptationSpec {
  double threshold_bps = 5e6;
  double window_s = 0.1;
  double hysteresis_hold_s = 2.0;
  double r_max_floor_bps = 0.0;
};

struct ReceiverSpec {
  int jitter_depth_frames = 4;
};

struct StimulusSpec {
  StimulusKind kind = StimulusKind::kReference;
  double fade_duration_s = 1.0;
  double loss_probability = 0.05;
  // Scripted drop for the adaptive stimuli when link.schedule is empty.
  std::optional<double> drop_time_s;  // default: a third of the scene
  double drop_capacity_bps = 4e6;
};

struct OutputSpec {
  std::filesystem::path dir = "out";
  bool audio = true;          // received Ambisonics, ACN channel order
  bool trace = true;          // CSV metric trace
  bool loudspeakers = false;  // decoded virtual-loudspeaker mix
  bool capture = false;       // sent datagrams, for wire-dump
  bool link_events = false;   // per-packet link CSV
};

struct ScenarioConfig {
  int schema_version = kSchemaVersion;
  std::string name = "scene";
  std::uint64_t seed = 1;
  int sample_rate = 48000;
  int frame_length = 128;
  int bit_depth = 16;
  int max_order = 3;
  double duration_s = 10.0;
  std::vector<SourceSpec> sources;
  LinkSpec link;
  AdaptationSpec adaptation;
  ReceiverSpec receiver;
  StimulusSpec stimulus;
  OutputSpec outputs;
  // Loudspeaker layout file; empty selects the built-in design.
  std::filesystem::path layout;

  double packet_interval() const {
    return static_cast<double>(frame_length) / sample_rate;
  }
  std::int64_t total_samples() const;
  std::int64_t frame_count() const;
  double drop_time() const;
};

// Parses JSON text. Relative paths are resolved against `base_dir`. Throws
// ConfigError with the field path on malformed or unknown fields; does not
// run validate().
ScenarioConfig parse_config(std::string_view json_text,
                            const std::filesystem::path& base_dir = {});
ScenarioConfig load_config(const std::filesystem::path& path);

// Checks ranges and cross-field constraints. Throws ConfigError.
void validate(const ScenarioConfig& config);

}  // namespace hoa::scenario

#endif  // HOA_SCENARIO_CONFIG_H_
