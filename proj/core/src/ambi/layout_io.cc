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

#include "hoa/ambi/layout_io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hoa/error.h"

namespace hoa::ambi {
namespace {

using nlohmann::json;

struct ParsedLayout {
  int order = 0;
  std::vector<Direction> directions;
  std::vector<double> weights;
};

double number_at(const json& node, const std::string& key,
                 const std::string& path) {
  if (!node.contains(key)) throw ConfigError(path + "." + key, "missing");
  if (!node.at(key).is_number()) {
    throw ConfigError(path + "." + key, "must be a number");
  }
  return node.at(key).get<double>();
}

ParsedLayout parse(std::string_view text, bool need_weights) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed layout JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("", "layout must be an object");
  ParsedLayout out;
  if (!root.contains("order") || !root.at("order").is_number_integer()) {
    throw ConfigError("order", "missing or not an integer");
  }
  out.order = root.at("order").get<int>();
  if (!root.contains("directions") || !root.at("directions").is_array()) {
    throw ConfigError("directions", "missing or not an array");
  }
  const json& list = root.at("directions");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "directions[" + std::to_string(i) + "]";
    const json& entry = list[i];
    if (!entry.is_object()) throw ConfigError(path, "must be an object");
    const double az = number_at(entry, "azimuth_deg", path);
    const double colat = number_at(entry, "colatitude_deg", path);
    if (colat < 0.0 || colat > 180.0) {
      throw ConfigError(path + ".colatitude_deg", "outside [0, 180]");
    }
    out.directions.emplace_back(deg_to_rad(az), deg_to_rad(colat));
    if (need_weights) out.weights.push_back(number_at(entry, "weight", path));
  }
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open layout file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

CapsuleArray parse_capsule_array(std::string_view json_text) {
  ParsedLayout parsed = parse(json_text, /*need_weights=*/true);
  return CapsuleArray(std::move(parsed.directions), std::move(parsed.weights),
                      parsed.order);
}

LoudspeakerLayout parse_loudspeaker_layout(std::string_view json_text) {
  ParsedLayout parsed = parse(json_text, /*need_weights=*/false);
  return LoudspeakerLayout(std::move(parsed.directions), parsed.order);
}

CapsuleArray load_capsule_array(const std::filesystem::path& path) {
  return parse_capsule_array(slurp(path));
}

LoudspeakerLayout load_loudspeaker_layout(const std::filesystem::path& path) {
  return parse_loudspeaker_layout(slurp(path));
}

}  // namespace hoa::ambi
