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

#include "hoa/scenario/runner.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <utility>

#include "hoa/ambi/layout_io.h"
#include "hoa/error.h"
#include "hoa/pipeline/bandwidth.h"
#include "hoa/pipeline/receiver.h"
#include "hoa/pipeline/sender.h"
#include "hoa/scenario/scene.h"
#include "hoa/scenario/wav.h"

namespace hoa::scenario {
namespace {

constexpr double kTimeEpsilon = 1e-9;

std::int64_t ns(double seconds) { return netsim::to_nanoseconds(seconds); }

netsim::LinkConfig base_link(const ScenarioConfig& c) {
  netsim::LinkConfig link;
  link.capacity_bps = c.link.capacity_bps;
  link.schedule = c.link.schedule;
  link.queue_limit_bytes = c.link.queue_limit_bytes;
  link.propagation_delay = c.link.propagation_delay_s;
  link.jitter_stddev = c.link.jitter_stddev_s;
  link.loss_probability = c.link.loss_probability;
  link.rng_seed = c.seed;
  return link;
}

}  // namespace

StimulusPlan plan_stimulus(const ScenarioConfig& c, StimulusKind kind) {
  StimulusPlan plan;
  plan.kind = kind;
  plan.link = base_link(c);
  pipeline::ControllerConfig& ctl = plan.controller;
  ctl.max_order = c.max_order;
  ctl.threshold_bps = c.adaptation.threshold_bps;
  ctl.r_max_floor_bps = c.adaptation.r_max_floor_bps;
  ctl.r_max_ceiling_bps = c.link.capacity_bps;
  ctl.sample_rate = c.sample_rate;
  ctl.frame_length = c.frame_length;
  ctl.bit_depth = c.bit_depth;
  ctl.hysteresis_hold_s = c.adaptation.hysteresis_hold_s;
  ctl.fade_duration_s = 0.0;
  plan.session_order = c.max_order;

  const auto scripted_drop = [&] {
    if (plan.link.schedule.empty()) {
      plan.link.schedule = {{c.drop_time(), c.stimulus.drop_capacity_bps}};
    }
  };
  switch (kind) {
    case StimulusKind::kReference:
      ctl.forced_order = c.max_order;
      plan.link.loss_probability = 0.0;
      plan.link.schedule.clear();
      break;
    case StimulusKind::kOmni:
      ctl.forced_order = 0;
      plan.session_order = 0;
      break;
    case StimulusKind::kFirstOrder:
      ctl.forced_order = std::min(1, c.max_order);
      plan.session_order = *ctl.forced_order;
      break;
    case StimulusKind::kInstantaneous:
      scripted_drop();
      break;
    case StimulusKind::kCrossfade:
      ctl.fade_duration_s = c.stimulus.fade_duration_s;
      scripted_drop();
      break;
    case StimulusKind::kCorrupted:
      ctl.forced_order = c.max_order;
      plan.link.loss_probability = c.stimulus.loss_probability;
      plan.link.schedule.clear();
      break;
  }
  return plan;
}

StimulusResult run_stimulus(const ScenarioConfig& c, StimulusKind kind) {
  validate(c);
  return run_stimulus(c, kind, build_scene(c));
}

StimulusResult run_stimulus(const ScenarioConfig& c, StimulusKind kind,
                            const std::vector<ambi::SourceSignal>& scene) {
  const StimulusPlan plan = plan_stimulus(c, kind);
  const double tp = c.packet_interval();
  const std::int64_t frames = c.frame_count();
  const auto tick_time = [tp](std::int64_t j) {
    return static_cast<double>(j) * tp;
  };

  StimulusResult result;
  result.kind = kind;
  result.session_order = plan.session_order;
  const double ticks_per_window =
      std::floor(c.adaptation.window_s / tp + kTimeEpsilon);
  result.estimator_window_s = ticks_per_window * tp;
  result.ambisonics = Eigen::MatrixXd::Zero(
      ambi::channel_count(plan.session_order), frames * c.frame_length);
  result.sent.reserve(static_cast<std::size_t>(frames));
  result.playout.reserve(static_cast<std::size_t>(frames));

  netsim::Link link(plan.link);
  pipeline::Sender sender({plan.controller, wire::OverflowPolicy::kClamp});
  pipeline::ReceiverConfig receiver_config;
  receiver_config.session_max_order = plan.session_order;
  receiver_config.sample_rate = c.sample_rate;
  receiver_config.frame_length = c.frame_length;
  receiver_config.jitter_depth_frames = c.receiver.jitter_depth_frames;
  receiver_config.fade_duration_samples =
      plan.controller.fade_duration_samples();
  pipeline::Receiver receiver(receiver_config);
  pipeline::BandwidthEstimator estimator(result.estimator_window_s, tp);

  std::vector<TraceRow>& trace = result.trace;
  std::int64_t played = 0;

  const auto play_one = [&](double when) {
    pipeline::PlayoutFrame out = receiver.play();
    result.ambisonics.middleCols(out.seq * c.frame_length, c.frame_length) =
        out.frame.samples();
    result.playout.push_back(
        {out.seq, when, out.concealed, out.received_order, out.fade_active});
    if (out.concealed) {
      trace.push_back({ns(when), TraceEvent::kConceal, out.seq, {}, {}, {}});
    }
    ++played;
  };

  const auto process_until = [&](double limit) {
    while (played < frames) {
      const std::optional<double> delivery = link.next_delivery_time();
      const std::optional<double> deadline = receiver.next_playout_time();
      if (delivery && *delivery <= limit &&
          (!deadline || *delivery <= *deadline)) {
        for (const netsim::Delivery& d : link.deliveries(*delivery)) {
          receiver.on_datagram(d.bytes, d.time);
        }
      } else if (deadline && *deadline <= limit) {
        play_one(*deadline);
      } else {
        break;
      }
    }
  };

  // Estimates go into the trace once per configured window, not per hop.
  std::int64_t last_trace_bucket = 0;
  for (std::int64_t j = 0; j < frames; ++j) {
    const double now = tick_time(j);
    process_until(now);

    if (j > 0) {
      estimator.update(link.capacity_integral(tick_time(j - 1), now),
                       tick_time(j - 1));
    }
    estimator.advance(now);
    for (const pipeline::EstimateSample& s : estimator.take_published()) {
      const auto bucket = static_cast<std::int64_t>(
          std::floor(s.time / c.adaptation.window_s + kTimeEpsilon));
      if (bucket > last_trace_bucket) {
        last_trace_bucket = bucket;
        trace.push_back({ns(s.time), TraceEvent::kBandwidthEstimate, {}, {},
                         std::llround(s.bps), {}});
      }
    }

    const ambi::AmbisonicFrame frame = ambi::encode_plane_waves(
        scene, c.max_order, j * c.frame_length, c.frame_length);
    const std::optional<double> estimate = estimator.estimate();
    pipeline::SentPacket sent = sender.tick(frame, estimate, now);
    const pipeline::TickDecision& d = sent.decision;

    std::optional<std::int64_t> bandwidth;
    if (estimate) bandwidth = std::llround(*estimate);
    if (d.fade_started) {
      trace.push_back({ns(now), TraceEvent::kFadeStarted, j, d.pending_order,
                       bandwidth, {}});
    }
    if (d.fade_completed) {
      trace.push_back(
          {ns(now), TraceEvent::kFadeCompleted, j, d.order, bandwidth, {}});
    }
    if (d.order_changed) {
      trace.push_back(
          {ns(now), TraceEvent::kOrderChanged, j, d.order, bandwidth, {}});
    }

    const std::size_t length = sent.bytes.size();
    if (c.outputs.capture) result.capture.push_back({ns(now), sent.bytes});
    const netsim::SubmitResult submitted = link.submit(std::move(sent.bytes), now);
    const auto queue = static_cast<std::int64_t>(link.queued_bytes(now));
    trace.push_back(
        {ns(now), TraceEvent::kPacketSent, j, d.order, bandwidth, queue});
    if (!submitted.admitted) {
      trace.push_back({ns(now), TraceEvent::kPacketLost, j, d.order, {}, queue});
    }
    result.sent.push_back({j, now, length, submitted.admitted, d, estimate});
  }

  // Drain: nothing more is sent; play every remaining frame.
  while (played < frames) {
    if (!receiver.next_playout_time() && !link.next_delivery_time()) {
      // Nothing ever arrived: every frame is concealed on the nominal clock.
      receiver.anchor_at(plan.link.propagation_delay +
                         c.receiver.jitter_depth_frames * tp);
    }
    process_until(std::numeric_limits<double>::infinity());
  }

  for (const netsim::LinkEvent& e : link.events()) {
    if (e.kind == netsim::LinkEvent::Kind::kDrop &&
        e.reason == netsim::DropReason::kRandomLoss) {
      const auto seq = static_cast<std::int64_t>(e.id);
      trace.push_back({ns(e.time), TraceEvent::kPacketLost, seq,
                       result.sent[static_cast<std::size_t>(seq)].decision.order,
                       {}, {}});
    }
  }
  sort_trace(trace);

  if (c.outputs.link_events) {
    std::ostringstream csv;
    link.write_event_csv(csv);
    result.link_events_csv = csv.str();
  }
  result.link_stats = link.stats();
  result.concealed = receiver.buffer().concealed();
  result.late = receiver.buffer().late();
  result.duplicates = receiver.buffer().duplicates();
  result.parse_errors = receiver.parse_errors().total();
  result.clamped_samples = sender.clamped_samples();
  result.starvation_ticks = sender.controller().starvation_count();
  return result;
}

ambi::LoudspeakerLayout make_layout(const ScenarioConfig& c) {
  if (!c.layout.empty()) {
    ambi::LoudspeakerLayout layout = ambi::load_loudspeaker_layout(c.layout);
    if (layout.order() < c.max_order) {
      throw ConfigError("layout", "layout order below max_order");
    }
    return layout;
  }
  return ambi::LoudspeakerLayout::builtin(c.max_order);
}

std::string output_stem(const ScenarioConfig& c, StimulusKind kind) {
  return c.name + "_" + file_suffix(kind);
}

std::vector<std::filesystem::path> write_outputs(
    const ScenarioConfig& c, const StimulusResult& result,
    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  const std::string stem = output_stem(c, result.kind);
  std::vector<std::pair<fs::path, fs::path>> staged;  // (tmp, final)
  const auto stage = [&](const std::string& file_name) {
    const fs::path final_path = dir / file_name;
    fs::path tmp = final_path;
    tmp += ".tmp";
    staged.emplace_back(tmp, final_path);
    return tmp;
  };
  const auto discard = [&] {
    for (const auto& [tmp, final_path] : staged) {
      fs::remove(tmp, ec);
    }
  };

  try {
    if (c.outputs.audio) {
      write_wav(stage(stem + ".wav"), result.ambisonics, c.sample_rate,
                c.bit_depth);
    }
    if (c.outputs.loudspeakers) {
      const ambi::LoudspeakerLayout layout = make_layout(c);
      write_wav(stage(stem + "_speakers.wav"),
                ambi::decode_loudspeakers(result.ambisonics, layout),
                c.sample_rate, c.bit_depth);
    }
    if (c.outputs.trace) write_trace(result.trace, stage(stem + ".csv"));
    if (c.outputs.capture) write_capture(result.capture, stage(stem + ".hoap"));
    if (c.outputs.link_events) {
      const fs::path tmp = stage(stem + "_link.csv");
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << result.link_events_csv;
      if (!out) throw IoError("write failed: " + tmp.string());
    }
  } catch (...) {
    discard();
    throw;
  }

  std::vector<fs::path> written;
  for (const auto& [tmp, final_path] : staged) {
    fs::rename(tmp, final_path, ec);
    if (ec) {
      discard();
      for (const fs::path& p : written) fs::remove(p, ec);
      throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
    }
    written.push_back(final_path);
  }
  return written;
}

}  // namespace hoa::scenario
