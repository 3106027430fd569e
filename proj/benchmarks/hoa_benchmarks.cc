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

#include <filesystem>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hoa/ambi/encoder.h"
#include "hoa/ambi/loudspeaker_layout.h"
#include "hoa/ambi/spherical_harmonics.h"
#include "hoa/netsim/link.h"
#include "hoa/scenario/config.h"
#include "hoa/scenario/runner.h"
#include "hoa/wire/packet.h"

namespace {

using hoa::ambi::AmbisonicFrame;

void BM_ShEvalAll(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<double> out(hoa::ambi::channel_count(order));
  hoa::ambi::Direction d(0.3, 1.1);
  for (auto _ : state) {
    hoa::ambi::sh_eval_all(order, d, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ShEvalAll)->DenseRange(1, 7, 2);

void BM_EncodePlaneWave(benchmark::State& state) {
  std::vector<double> s(48000, 0.25);
  const auto src = hoa::ambi::SourceSignal::fixed(s, 48000.0, hoa::ambi::Direction(0.5, 1.0));
  std::int64_t start = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoa::ambi::encode_plane_wave(src, 3, start, 128));
    start = (start + 128) % (48000 - 128);
  }
  state.SetItemsProcessed(state.iterations() * 128);
}
BENCHMARK(BM_EncodePlaneWave);

void BM_Decode36(benchmark::State& state) {
  const auto layout = hoa::ambi::LoudspeakerLayout::builtin(3);
  const AmbisonicFrame f(3, Eigen::MatrixXd::Random(16, 128), 48000.0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hoa::ambi::decode_loudspeakers(f, layout));
}
BENCHMARK(BM_Decode36);

void BM_SerializeParse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const AmbisonicFrame f(order, Eigen::MatrixXd::Random(hoa::ambi::channel_count(order), 128) * 0.9,
                         48000.0, 0);
  for (auto _ : state) {
    const auto bytes = hoa::wire::serialize(hoa::wire::encapsulate(f, 1, 0, {}));
    auto parsed = hoa::wire::parse_packet(bytes);
    benchmark::DoNotOptimize(hoa::wire::dequantize(parsed.packet(), 48000.0));
  }
}
BENCHMARK(BM_SerializeParse)->DenseRange(0, 3);

void BM_LinkSubmitDeliver(benchmark::State& state) {
  hoa::netsim::LinkConfig c;
  c.loss_probability = 0.05;
  c.jitter_stddev = 0.002;
  c.queue_limit_bytes = 1 << 24;
  hoa::netsim::Link link(c);
  const std::vector<std::uint8_t> payload(4112, 0);
  double now = 0.0;
  for (auto _ : state) {
    link.submit(payload, now);
    benchmark::DoNotOptimize(link.deliveries(now));
    now += 128.0 / 48000.0;
  }
}
BENCHMARK(BM_LinkSubmitDeliver);

void BM_StimulusRun(benchmark::State& state) {
  hoa::scenario::ScenarioConfig c = hoa::scenario::load_config(
      std::filesystem::path(HOA_SOURCE_DIR) / "configs" / "azimuth_scene.json");
  c.duration_s = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hoa::scenario::run_stimulus(c, hoa::scenario::StimulusKind::kCrossfade));
  }
}
BENCHMARK(BM_StimulusRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
