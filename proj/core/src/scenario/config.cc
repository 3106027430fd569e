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

#include "hoa/scenario/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hoa/error.h"
#include "hoa/wire/packet.h"

namespace hoa::scenario {
namespace {

using nlohmann::json;

// Reads fields of one JSON object, remembering which keys were consumed so
// leftovers can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path)
      : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(display(), "must be an object");
  }

  std::string field_path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = node_.find(key);
    return it == node_.end() || it->is_null() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(field_path(key), "must be a number");
      out = v->get<double>();
    }
  }

  void optional_number(const std::string& key, std::optional<double>& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(field_path(key), "must be a number");
      out = v->get<double>();
    }
  }

  template <typename Int>
  void integer(const std::string& key, Int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) {
        throw ConfigError(field_path(key), "must be an integer");
      }
      if (std::is_unsigned_v<Int> && v->is_number_integer() &&
          !v->is_number_unsigned() && v->get<long long>() < 0) {
        throw ConfigError(field_path(key), "must be non-negative");
      }
      out = v->get<Int>();
    }
  }

  void boolean(const std::string& key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) throw ConfigError(field_path(key), "must be a boolean");
      out = v->get<bool>();
    }
  }

  void string(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ConfigError(field_path(key), "must be a string");
      out = v->get<std::string>();
    }
  }

  void finish() const {
    for (const auto& item : node_.items()) {
      if (!seen_.contains(item.key())) {
        throw ConfigError(field_path(item.key()), "unknown field");
      }
    }
  }

 private:
  std::string display() const { return path_; }

  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

SignalSpec parse_signal(const json& node, const std::string& path,
                        const std::filesystem::path& base) {
  ObjectReader r(node, path);
  SignalSpec s;
  std::string kind;
  r.string("kind", kind);
  if (kind == "sine") {
    s.kind = SignalSpec::Kind::kSine;
  } else if (kind == "noise_burst") {
    s.kind = SignalSpec::Kind::kNoiseBurst;
  } else if (kind == "exp_sweep") {
    s.kind = SignalSpec::Kind::kExpSweep;
  } else if (kind == "file") {
    s.kind = SignalSpec::Kind::kFile;
  } else {
    throw ConfigError(r.field_path("kind"),
                      "expected sine, noise_burst, exp_sweep or file");
  }
  r.number("amplitude", s.amplitude);
  r.number("frequency_hz", s.frequency_hz);
  r.number("low_hz", s.low_hz);
  r.number("high_hz", s.high_hz);
  r.number("burst_s", s.burst_s);
  r.number("gap_s", s.gap_s);
  r.number("start_hz", s.start_hz);
  r.number("end_hz", s.end_hz);
  r.number("sweep_s", s.sweep_s);
  std::string file;
  r.string("path", file);
  if (!file.empty()) s.path = resolve(base, file);
  if (s.kind == SignalSpec::Kind::kFile && file.empty()) {
    throw ConfigError(r.field_path("path"), "required for file signals");
  }
  r.finish();
  return s;
}

TrajectorySpec parse_trajectory(const json& node, const std::string& path) {
  ObjectReader r(node, path);
  TrajectorySpec t;
  std::string kind;
  r.string("kind", kind);
  if (kind == "static") {
    t.kind = TrajectorySpec::Kind::kStatic;
  } else if (kind == "azimuth_sweep") {
    t.kind = TrajectorySpec::Kind::kAzimuthSweep;
    t.from_deg = -90.0;
    t.to_deg = 90.0;
  } else if (kind == "elevation_sweep") {
    t.kind = TrajectorySpec::Kind::kElevationSweep;
    t.from_deg = 0.0;
    t.to_deg = 180.0;
  } else {
    throw ConfigError(r.field_path("kind"),
                      "expected static, azimuth_sweep or elevation_sweep");
  }
  r.number("azimuth_deg", t.azimuth_deg);
  r.number("elevation_deg", t.elevation_deg);
  r.number("from_deg", t.from_deg);
  r.number("to_deg", t.to_deg);
  r.number("duration_s", t.duration_s);
  r.finish();
  return t;
}

}  // namespace

const char* to_string(StimulusKind kind) {
  switch (kind) {
    case StimulusKind::kReference: return "reference";
    case StimulusKind::kOmni: return "omni";
    case StimulusKind::kFirstOrder: return "first_order";
    case StimulusKind::kInstantaneous: return "instantaneous";
    case StimulusKind::kCrossfade: return "crossfade";
    case StimulusKind::kCorrupted: return "corrupted";
  }
  return "unknown";
}

const char* file_suffix(StimulusKind kind) {
  switch (kind) {
    case StimulusKind::kReference: return "ref";
    case StimulusKind::kOmni: return "omni";
    case StimulusKind::kFirstOrder: return "o1";
    case StimulusKind::kInstantaneous: return "inst";
    case StimulusKind::kCrossfade: return "fade";
    case StimulusKind::kCorrupted: return "corr";
  }
  return "unknown";
}

std::optional<StimulusKind> parse_stimulus_kind(std::string_view name) {
  for (StimulusKind kind : kAllStimuli) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::int64_t ScenarioConfig::total_samples() const {
  return std::llround(duration_s * sample_rate);
}

std::int64_t ScenarioConfig::frame_count() const {
  return total_samples() / frame_length;
}

double ScenarioConfig::drop_time() const {
  return stimulus.drop_time_s.value_or(duration_s / 3.0);
}

ScenarioConfig parse_config(std::string_view json_text,
                            const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  ScenarioConfig c;
  ObjectReader r(root, "");
  r.integer("schema_version", c.schema_version);
  if (c.schema_version != kSchemaVersion) {
    throw ConfigError("schema_version",
                      "unsupported version " + std::to_string(c.schema_version));
  }
  r.string("name", c.name);
  r.integer("seed", c.seed);
  r.integer("sample_rate", c.sample_rate);
  r.integer("frame_length", c.frame_length);
  r.integer("bit_depth", c.bit_depth);
  r.integer("max_order", c.max_order);
  r.number("duration_s", c.duration_s);

  if (const json* sources = r.find("sources")) {
    if (!sources->is_array()) throw ConfigError("sources", "must be an array");
    for (std::size_t i = 0; i < sources->size(); ++i) {
      const std::string path = "sources[" + std::to_string(i) + "]";
      ObjectReader sr((*sources)[i], path);
      SourceSpec source;
      const json* signal = sr.find("signal");
      if (signal == nullptr) throw ConfigError(path + ".signal", "missing");
      source.signal = parse_signal(*signal, path + ".signal", base_dir);
      const json* trajectory = sr.find("trajectory");
      if (trajectory == nullptr) {
        throw ConfigError(path + ".trajectory", "missing");
      }
      source.trajectory = parse_trajectory(*trajectory, path + ".trajectory");
      sr.finish();
      c.sources.push_back(std::move(source));
    }
  }

  if (const json* link = r.find("link")) {
    ObjectReader lr(*link, "link");
    lr.number("capacity_bps", c.link.capacity_bps);
    lr.integer("queue_limit_bytes", c.link.queue_limit_bytes);
    lr.number("propagation_delay_s", c.link.propagation_delay_s);
    lr.number("jitter_stddev_s", c.link.jitter_stddev_s);
    lr.number("loss_probability", c.link.loss_probability);
    if (const json* schedule = lr.find("schedule")) {
      if (!schedule->is_array()) {
        throw ConfigError("link.schedule", "must be an array");
      }
      for (std::size_t i = 0; i < schedule->size(); ++i) {
        ObjectReader step((*schedule)[i],
                          "link.schedule[" + std::to_string(i) + "]");
        netsim::CapacityStep s{std::nan(""), std::nan("")};
        step.number("time_s", s.time);
        step.number("capacity_bps", s.capacity_bps);
        if (std::isnan(s.time)) throw ConfigError(step.field_path("time_s"), "missing");
        if (std::isnan(s.capacity_bps)) {
          throw ConfigError(step.field_path("capacity_bps"), "missing");
        }
        step.finish();
        c.link.schedule.push_back(s);
      }
    }
    lr.finish();
  }

  if (const json* adaptation = r.find("adaptation")) {
    ObjectReader ar(*adaptation, "adaptation");
    ar.number("threshold_bps", c.adaptation.threshold_bps);
    ar.number("window_s", c.adaptation.window_s);
    ar.number("hysteresis_hold_s", c.adaptation.hysteresis_hold_s);
    ar.number("r_max_floor_bps", c.adaptation.r_max_floor_bps);
    ar.finish();
  }

  if (const json* receiver = r.find("receiver")) {
    ObjectReader rr(*receiver, "receiver");
    rr.integer("jitter_depth_frames", c.receiver.jitter_depth_frames);
    rr.finish();
  }

  if (const json* stimulus = r.find("stimulus")) {
    ObjectReader sr(*stimulus, "stimulus");
    std::string kind = to_string(c.stimulus.kind);
    sr.string("kind", kind);
    const auto parsed = parse_stimulus_kind(kind);
    if (!parsed) {
      throw ConfigError("stimulus.kind",
                        "expected reference, omni, first_order, instantaneous, "
                        "crossfade or corrupted");
    }
    c.stimulus.kind = *parsed;
    sr.number("fade_duration_s", c.stimulus.fade_duration_s);
    sr.number("loss_probability", c.stimulus.loss_probability);
    if (const json* drop = sr.find("drop")) {
      ObjectReader dr(*drop, "stimulus.drop");
      dr.optional_number("time_s", c.stimulus.drop_time_s);
      dr.number("capacity_bps", c.stimulus.drop_capacity_bps);
      dr.finish();
    }
    sr.finish();
  }

  if (const json* outputs = r.find("outputs")) {
    ObjectReader orr(*outputs, "outputs");
    std::string dir;
    orr.string("dir", dir);
    if (!dir.empty()) c.outputs.dir = resolve(base_dir, dir);
    orr.boolean("audio", c.outputs.audio);
    orr.boolean("trace", c.outputs.trace);
    orr.boolean("loudspeakers", c.outputs.loudspeakers);
    orr.boolean("capture", c.outputs.capture);
    orr.boolean("link_events", c.outputs.link_events);
    orr.finish();
  } else if (!base_dir.empty()) {
    c.outputs.dir = base_dir / c.outputs.dir;
  }

  std::string layout;
  r.string("layout", layout);
  if (!layout.empty()) c.layout = resolve(base_dir, layout);
  r.finish();
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path());
}

void validate(const ScenarioConfig& c) {
  const auto require = [](bool ok, const std::string& path,
                          const std::string& message) {
    if (!ok) throw ConfigError(path, message);
  };
  const auto positive = [&](double v, const std::string& path) {
    require(v > 0.0 && std::isfinite(v), path, "must be positive");
  };
  const auto non_negative = [&](double v, const std::string& path) {
    require(v >= 0.0 && std::isfinite(v), path, "must be >= 0");
  };
  const auto probability = [&](double v, const std::string& path) {
    require(v >= 0.0 && v <= 1.0, path, "must lie in [0, 1]");
  };

  require(!c.name.empty() && c.name.find('/') == std::string::npos, "name",
          "must be a non-empty file-name stem");
  require(c.sample_rate >= 8000 && c.sample_rate <= 384000, "sample_rate",
          "must lie in [8000, 384000]");
  require(c.frame_length >= 1 && c.frame_length <= 0xFFFF, "frame_length",
          "must lie in [1, 65535]");
  require(wire::is_supported_bit_depth(c.bit_depth), "bit_depth",
          "must be 16, 24 or 32");
  require(c.max_order >= 0 && c.max_order <= wire::kMaxWireOrder, "max_order",
          "must lie in [0, 15]");
  require(!c.layout.empty() || c.max_order <= 4, "max_order",
          "orders above 4 need an explicit layout file");
  positive(c.duration_s, "duration_s");
  require(c.frame_count() >= 1, "duration_s", "shorter than one frame");
  require(!c.sources.empty(), "sources", "at least one source is required");

  for (std::size_t i = 0; i < c.sources.size(); ++i) {
    const std::string p = "sources[" + std::to_string(i) + "]";
    const SignalSpec& s = c.sources[i].signal;
    require(s.amplitude > 0.0 && s.amplitude <= 1.0, p + ".signal.amplitude",
            "must lie in (0, 1]");
    const double nyquist = c.sample_rate / 2.0;
    switch (s.kind) {
      case SignalSpec::Kind::kSine:
        require(s.frequency_hz > 0.0 && s.frequency_hz < nyquist,
                p + ".signal.frequency_hz", "must lie in (0, Nyquist)");
        break;
      case SignalSpec::Kind::kNoiseBurst:
        require(s.low_hz > 0.0 && s.low_hz < s.high_hz && s.high_hz < nyquist,
                p + ".signal.low_hz", "need 0 < low_hz < high_hz < Nyquist");
        positive(s.burst_s, p + ".signal.burst_s");
        non_negative(s.gap_s, p + ".signal.gap_s");
        break;
      case SignalSpec::Kind::kExpSweep:
        require(s.start_hz > 0.0 && s.start_hz < s.end_hz && s.end_hz < nyquist,
                p + ".signal.start_hz",
                "need 0 < start_hz < end_hz < Nyquist");
        non_negative(s.sweep_s, p + ".signal.sweep_s");
        break;
      case SignalSpec::Kind::kFile:
        require(std::filesystem::exists(s.path), p + ".signal.path",
                "file not found: " + s.path.string());
        break;
    }
    const TrajectorySpec& t = c.sources[i].trajectory;
    non_negative(t.duration_s, p + ".trajectory.duration_s");
    require(std::isfinite(t.from_deg) && std::isfinite(t.to_deg) &&
                std::isfinite(t.azimuth_deg) && std::isfinite(t.elevation_deg),
            p + ".trajectory", "angles must be finite");
    if (t.kind == TrajectorySpec::Kind::kStatic) {
      require(std::abs(t.elevation_deg) <= 90.0, p + ".trajectory.elevation_deg",
              "must lie in [-90, 90]");
    }
    if (t.kind == TrajectorySpec::Kind::kAzimuthSweep) {
      require(std::abs(t.elevation_deg) <= 90.0, p + ".trajectory.elevation_deg",
              "must lie in [-90, 90]");
    }
  }

  positive(c.link.capacity_bps, "link.capacity_bps");
  non_negative(c.link.propagation_delay_s, "link.propagation_delay_s");
  non_negative(c.link.jitter_stddev_s, "link.jitter_stddev_s");
  probability(c.link.loss_probability, "link.loss_probability");
  for (std::size_t i = 0; i < c.link.schedule.size(); ++i) {
    const std::string p = "link.schedule[" + std::to_string(i) + "]";
    non_negative(c.link.schedule[i].time, p + ".time_s");
    positive(c.link.schedule[i].capacity_bps, p + ".capacity_bps");
    require(i == 0 || c.link.schedule[i].time > c.link.schedule[i - 1].time,
            p + ".time_s", "schedule times must be strictly increasing");
  }

  non_negative(c.adaptation.threshold_bps, "adaptation.threshold_bps");
  require(c.adaptation.window_s >= c.packet_interval() &&
              std::isfinite(c.adaptation.window_s),
          "adaptation.window_s", "must be at least one packet interval");
  non_negative(c.adaptation.hysteresis_hold_s, "adaptation.hysteresis_hold_s");
  non_negative(c.adaptation.r_max_floor_bps, "adaptation.r_max_floor_bps");
  require(c.adaptation.r_max_floor_bps <= c.link.capacity_bps,
          "adaptation.r_max_floor_bps", "must not exceed link.capacity_bps");

  require(c.receiver.jitter_depth_frames >= 0 &&
              c.receiver.jitter_depth_frames <= 100000,
          "receiver.jitter_depth_frames", "must lie in [0, 100000]");

  require(c.stimulus.fade_duration_s > 0.0 &&
              std::llround(c.stimulus.fade_duration_s * c.sample_rate) <= 0xFFFF,
          "stimulus.fade_duration_s",
          "must be positive and at most 65535 samples");
  probability(c.stimulus.loss_probability, "stimulus.loss_probability");
  if (c.stimulus.drop_time_s) {
    require(*c.stimulus.drop_time_s >= 0.0 &&
                *c.stimulus.drop_time_s < c.duration_s,
            "stimulus.drop.time_s", "must lie in [0, duration_s)");
  }
  positive(c.stimulus.drop_capacity_bps, "stimulus.drop.capacity_bps");
  if (!c.layout.empty()) {
    require(std::filesystem::exists(c.layout), "layout",
            "file not found: " + c.layout.string());
  }
}

}  // namespace hoa::scenario
