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

// hoa_sim: scenario runner for the adaptive Ambisonics streaming simulator.
//
//   hoa_sim run <config>         run the config's stimulus
//   hoa_sim stimuli <config>     run all six stimulus conditions
//   hoa_sim validate <config>    check the config without running
//   hoa_sim wire-dump <capture>  print a packet capture
//
// Exit codes: 0 ok, 2 usage, 3 config, 4 runtime.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hoa/error.h"
#include "hoa/scenario/capture.h"
#include "hoa/scenario/config.h"
#include "hoa/scenario/runner.h"
#include "hoa/scenario/scene.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitRuntime = 4;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  bool quiet = false;
};

hoa::scenario::ScenarioConfig load(const std::string& path,
                                   const GlobalOptions& options) {
  hoa::scenario::ScenarioConfig config = hoa::scenario::load_config(path);
  if (options.seed) config.seed = *options.seed;
  if (!options.out_dir.empty()) {
    config.outputs.dir = options.out_dir;
  } else if (const char* env = std::getenv("HOA_OUT_DIR"); env && *env) {
    config.outputs.dir = env;
  }
  hoa::scenario::validate(config);
  return config;
}

void report(const hoa::scenario::StimulusResult& r,
            const std::vector<std::filesystem::path>& files) {
  int changes = 0;
  for (const auto& s : r.sent) changes += s.decision.order_changed ? 1 : 0;
  std::cout << hoa::scenario::to_string(r.kind) << ": " << r.sent.size()
            << " packets, " << changes << " order changes, " << r.concealed
            << " concealed, " << r.link_stats.queue_overflow
            << " queue drops, " << r.link_stats.random_loss << " random losses";
  if (r.clamped_samples > 0) std::cout << ", " << r.clamped_samples << " clamped";
  std::cout << '\n';
  for (const auto& f : files) std::cout << "  wrote " << f.string() << '\n';
}

int run_kinds(const std::string& path, const GlobalOptions& options,
              bool all_stimuli) {
  const hoa::scenario::ScenarioConfig config = load(path, options);
  const auto scene = hoa::scenario::build_scene(config);
  std::vector<hoa::scenario::StimulusKind> kinds;
  if (all_stimuli) {
    kinds.assign(hoa::scenario::kAllStimuli.begin(),
                 hoa::scenario::kAllStimuli.end());
  } else {
    kinds.push_back(config.stimulus.kind);
  }
  std::vector<std::filesystem::path> written;
  try {
    for (hoa::scenario::StimulusKind kind : kinds) {
      const hoa::scenario::StimulusResult result =
          hoa::scenario::run_stimulus(config, kind, scene);
      const auto files =
          hoa::scenario::write_outputs(config, result, config.outputs.dir);
      written.insert(written.end(), files.begin(), files.end());
      if (!options.quiet) report(result, files);
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& f : written) std::filesystem::remove(f, ec);
    throw;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive higher-order Ambisonics streaming simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  app.add_option("--seed", options.seed, "Override the scenario seed");
  app.add_option("--out-dir", options.out_dir,
                 "Output directory (overrides HOA_OUT_DIR and the config)");
  app.add_flag("-q,--quiet", options.quiet, "Suppress progress output");

  std::string config_path;
  std::string capture_path;
  CLI::App* run = app.add_subcommand("run", "Run the configured stimulus");
  run->add_option("config", config_path, "Scenario config (JSON)")->required();
  CLI::App* stimuli =
      app.add_subcommand("stimuli", "Run all six stimulus conditions");
  stimuli->add_option("config", config_path, "Scenario config (JSON)")
      ->required();
  CLI::App* validate =
      app.add_subcommand("validate", "Check a config without running it");
  validate->add_option("config", config_path, "Scenario config (JSON)")
      ->required();
  CLI::App* dump =
      app.add_subcommand("wire-dump", "Print the packets of a capture file");
  dump->add_option("capture", capture_path, "Capture file (.hoap)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return run_kinds(config_path, options, /*all_stimuli=*/false);
    if (*stimuli) return run_kinds(config_path, options, /*all_stimuli=*/true);
    if (*validate) {
      load(config_path, options);
      if (!options.quiet) std::cout << config_path << ": ok\n";
      return kExitOk;
    }
    if (*dump) {
      hoa::scenario::dump_capture(hoa::scenario::read_capture(capture_path),
                                  std::cout);
      return kExitOk;
    }
  } catch (const hoa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
