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

#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hoa/error.h"

namespace hoa::scenario {
namespace {

using nlohmann::json;

json minimal() {
  return json::parse(R"({
    "schema_version": 1,
    "sources": [{"signal": {"kind": "sine"},
                 "trajectory": {"kind": "static", "azimuth_deg": 30}}]
  })");
}

std::string error_path(const json& j) {
  try {
    validate(parse_config(j.dump()));
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(Config, DefaultsFromMinimalConfig) {
  const ScenarioConfig c = parse_config(minimal().dump());
  EXPECT_NO_THROW(validate(c));
  EXPECT_EQ(c.sample_rate, 48000);
  EXPECT_EQ(c.frame_length, 128);
  EXPECT_EQ(c.max_order, 3);
  EXPECT_DOUBLE_EQ(c.link.capacity_bps, 13e6);
  EXPECT_DOUBLE_EQ(c.adaptation.threshold_bps, 5e6);
  EXPECT_EQ(c.frame_count(), 3750);
  EXPECT_EQ(c.total_samples(), 480000);
  EXPECT_NEAR(c.drop_time(), 10.0 / 3.0, 1e-9);
  EXPECT_DOUBLE_EQ(c.packet_interval(), 128.0 / 48000.0);
}

TEST(Config, FullDocumentParses) {
  json j = minimal();
  j["name"] = "demo";
  j["seed"] = 99;
  j["link"] = {{"capacity_bps", 8e6},
               {"schedule", {{{"time_s", 1.0}, {"capacity_bps", 1e6}}}}};
  j["stimulus"] = {{"kind", "crossfade"},
                   {"drop", {{"time_s", 2.0}, {"capacity_bps", 3e6}}}};
  j["outputs"] = {{"dir", "results"}, {"capture", true}};
  const ScenarioConfig c = parse_config(j.dump(), "/base");
  EXPECT_EQ(c.name, "demo");
  EXPECT_EQ(c.seed, 99u);
  ASSERT_EQ(c.link.schedule.size(), 1u);
  EXPECT_DOUBLE_EQ(c.link.schedule[0].capacity_bps, 1e6);
  EXPECT_EQ(c.stimulus.kind, StimulusKind::kCrossfade);
  EXPECT_DOUBLE_EQ(c.drop_time(), 2.0);
  EXPECT_EQ(c.outputs.dir, std::filesystem::path("/base/results"));
  EXPECT_TRUE(c.outputs.capture);
}

TEST(Config, LossProbabilityOutOfRangeNamesField) {
  json j = minimal();
  j["link"] = {{"loss_probability", 1.5}};
  EXPECT_EQ(error_path(j), "link.loss_probability");
}

TEST(Config, ValidationPaths) {
  json j = minimal();
  j["bit_depth"] = 20;
  EXPECT_EQ(error_path(j), "bit_depth");
  j = minimal();
  j["sources"][0]["signal"]["frequency_hz"] = 30000;
  EXPECT_EQ(error_path(j), "sources[0].signal.frequency_hz");
  j = minimal();
  j["link"] = {{"schedule", {{{"time_s", 2.0}, {"capacity_bps", 1e6}},
                             {{"time_s", 1.0}, {"capacity_bps", 1e6}}}}};
  EXPECT_EQ(error_path(j), "link.schedule[1].time_s");
  j = minimal();
  j["adaptation"] = {{"window_s", 0.001}};
  EXPECT_EQ(error_path(j), "adaptation.window_s");
  j = minimal();
  j["stimulus"] = {{"fade_duration_s", 2.0}};
  EXPECT_EQ(error_path(j), "stimulus.fade_duration_s");
  j = minimal();
  j["sources"] = json::array();
  EXPECT_EQ(error_path(j), "sources");
}

TEST(Config, ParseErrors) {
  json j = minimal();
  j["link"] = {{"capacity", 1}};
  EXPECT_EQ(error_path(j), "link.capacity");
  j = minimal();
  j["schema_version"] = 2;
  EXPECT_EQ(error_path(j), "schema_version");
  j = minimal();
  j["stimulus"] = {{"kind", "loud"}};
  EXPECT_EQ(error_path(j), "stimulus.kind");
  j = minimal();
  j["sources"][0]["trajectory"]["azimuth_deg"] = "left";
  EXPECT_EQ(error_path(j), "sources[0].trajectory.azimuth_deg");
  j = minimal();
  j["sources"][0]["signal"] = {{"kind", "file"}};
  EXPECT_EQ(error_path(j), "sources[0].signal.path");
  EXPECT_THROW(parse_config("{not json"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, StimulusNames) {
  for (StimulusKind k : kAllStimuli) {
    EXPECT_EQ(parse_stimulus_kind(to_string(k)), k);
  }
  EXPECT_STREQ(file_suffix(StimulusKind::kReference), "ref");
  EXPECT_STREQ(file_suffix(StimulusKind::kOmni), "omni");
  EXPECT_STREQ(file_suffix(StimulusKind::kFirstOrder), "o1");
  EXPECT_STREQ(file_suffix(StimulusKind::kInstantaneous), "inst");
  EXPECT_STREQ(file_suffix(StimulusKind::kCrossfade), "fade");
  EXPECT_STREQ(file_suffix(StimulusKind::kCorrupted), "corr");
  EXPECT_FALSE(parse_stimulus_kind("other"));
}

TEST(Config, ShippedConfigsValidate) {
  for (const char* name : {"azimuth_scene.json", "elevation_scene.json"}) {
    EXPECT_NO_THROW(validate(load_config(std::filesystem::path(HOA_SOURCE_DIR) /
                                         "configs" / name)))
        << name;
  }
}

}  // namespace
}  // namespace hoa::scenario
