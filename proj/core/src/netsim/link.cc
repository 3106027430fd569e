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

#include "hoa/netsim/link.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "hoa/error.h"

namespace hoa::netsim {
namespace {

void validate_schedule(const std::vector<CapacityStep>& schedule) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i].capacity_bps > 0.0) ||
        !std::isfinite(schedule[i].capacity_bps)) {
      throw DomainError("capacity schedule step " + std::to_string(i) +
                        ": capacity must be positive");
    }
    if (!std::isfinite(schedule[i].time)) {
      throw DomainError("capacity schedule step " + std::to_string(i) +
                        ": time must be finite");
    }
    if (i > 0 && !(schedule[i].time > schedule[i - 1].time)) {
      throw DomainError("capacity schedule times must be strictly increasing");
    }
  }
}

}  // namespace

void LinkConfig::validate() const {
  if (!(capacity_bps > 0.0) || !std::isfinite(capacity_bps)) {
    throw DomainError("link capacity must be positive");
  }
  validate_schedule(schedule);
  if (!(propagation_delay >= 0.0) || !std::isfinite(propagation_delay)) {
    throw DomainError("propagation delay must be >= 0");
  }
  if (!(jitter_stddev >= 0.0) || !std::isfinite(jitter_stddev)) {
    throw DomainError("jitter stddev must be >= 0");
  }
  if (!(loss_probability >= 0.0 && loss_probability <= 1.0)) {
    throw DomainError("loss probability must lie in [0, 1]");
  }
}

const char* to_string(DropReason reason) {
  switch (reason) {
    case DropReason::kQueueOverflow: return "queue_overflow";
    case DropReason::kRandomLoss: return "random_loss";
  }
  return "unknown";
}

const char* to_string(LinkEvent::Kind kind) {
  switch (kind) {
    case LinkEvent::Kind::kSubmit: return "submit";
    case LinkEvent::Kind::kDepart: return "depart";
    case LinkEvent::Kind::kDeliver: return "deliver";
    case LinkEvent::Kind::kDrop: return "drop";
  }
  return "unknown";
}

std::int64_t to_nanoseconds(double seconds) {
  return std::llround(seconds * 1e9);
}

Link::Link(LinkConfig config)
    : config_(std::move(config)),
      loss_rng_(make_stream(config_.rng_seed, kLossStream)),
      jitter_rng_(make_stream(config_.rng_seed, kJitterStream)) {
  config_.validate();
}

void Link::set_capacity_schedule(std::vector<CapacityStep> schedule) {
  validate_schedule(schedule);
  config_.schedule = std::move(schedule);
}

double Link::capacity_at(double t) const {
  double capacity = config_.capacity_bps;
  for (const CapacityStep& step : config_.schedule) {
    if (step.time > t) break;
    capacity = step.capacity_bps;
  }
  return capacity;
}

double Link::capacity_integral(double t0, double t1) const {
  if (t1 <= t0) return 0.0;
  double total = 0.0;
  double segment_start = t0;
  double capacity = capacity_at(t0);
  for (const CapacityStep& step : config_.schedule) {
    if (step.time <= t0) continue;
    if (step.time >= t1) break;
    total += capacity * (step.time - segment_start);
    segment_start = step.time;
    capacity = step.capacity_bps;
  }
  return total + capacity * (t1 - segment_start);
}

SubmitResult Link::submit(std::vector<std::uint8_t> bytes, double now) {
  if (last_submit_ && now < *last_submit_) {
    throw ClockRegressionError("link submit at " + std::to_string(now) +
                               " s precedes " + std::to_string(*last_submit_) +
                               " s");
  }
  last_submit_ = now;
  SubmitResult result;
  result.id = next_id_++;
  ++stats_.submitted;
  const std::size_t length = bytes.size();
  events_.push_back({LinkEvent::Kind::kSubmit, now, result.id, length, {}});

  if (queued_bytes(now) + length > config_.queue_limit_bytes) {
    ++stats_.queue_overflow;
    events_.push_back({LinkEvent::Kind::kDrop, now, result.id, length,
                       DropReason::kQueueOverflow});
    return result;
  }

  const double start = std::max(now, last_departure_);
  const double departure =
      start + static_cast<double>(length) * 8.0 / capacity_at(now);
  last_departure_ = departure;

  const bool lost = loss_rng_.bernoulli(config_.loss_probability);
  double jitter = 0.0;
  if (config_.jitter_stddev > 0.0) {
    jitter = std::max(0.0, config_.jitter_stddev * jitter_rng_.normal());
  }
  const double delivery = departure + config_.propagation_delay + jitter;

  in_flight_.push_back({result.id, std::move(bytes), departure, delivery, lost});
  ++stats_.in_flight;
  result.admitted = true;
  result.departure_time = departure;
  return result;
}

std::vector<Delivery> Link::deliveries(double until) {
  std::vector<Delivery> out;
  for (InFlight& packet : in_flight_) {
    if (packet.departure_time > until || packet.departed_logged) continue;
    packet.departed_logged = true;
    events_.push_back({LinkEvent::Kind::kDepart, packet.departure_time,
                       packet.id, packet.bytes.size(), {}});
    if (packet.lost) {
      events_.push_back({LinkEvent::Kind::kDrop, packet.departure_time,
                         packet.id, packet.bytes.size(),
                         DropReason::kRandomLoss});
      ++stats_.random_loss;
      --stats_.in_flight;
    }
  }
  std::deque<InFlight> remaining;
  for (InFlight& packet : in_flight_) {
    if (packet.lost && packet.departed_logged) continue;
    if (!packet.lost && packet.delivery_time <= until) {
      out.push_back({packet.id, packet.delivery_time, std::move(packet.bytes)});
      continue;
    }
    remaining.push_back(std::move(packet));
  }
  in_flight_ = std::move(remaining);

  std::sort(out.begin(), out.end(), [](const Delivery& a, const Delivery& b) {
    return a.time != b.time ? a.time < b.time : a.id < b.id;
  });
  for (const Delivery& d : out) {
    events_.push_back(
        {LinkEvent::Kind::kDeliver, d.time, d.id, d.bytes.size(), {}});
  }
  stats_.delivered += out.size();
  stats_.in_flight -= out.size();
  return out;
}

std::size_t Link::queued_bytes(double now) const {
  std::size_t total = 0;
  for (const InFlight& packet : in_flight_) {
    if (packet.departure_time > now) total += packet.bytes.size();
  }
  return total;
}

std::optional<double> Link::next_delivery_time() const {
  std::optional<double> earliest;
  for (const InFlight& packet : in_flight_) {
    const double t = packet.lost ? packet.departure_time : packet.delivery_time;
    if (!earliest || t < *earliest) earliest = t;
  }
  return earliest;
}

void Link::write_event_csv(std::ostream& out) const {
  std::vector<const LinkEvent*> rows;
  rows.reserve(events_.size());
  for (const LinkEvent& e : events_) rows.push_back(&e);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LinkEvent* a, const LinkEvent* b) {
                     return to_nanoseconds(a->time) < to_nanoseconds(b->time);
                   });
  out << "time_ns,event,packet_id,bytes,reason\n";
  for (const LinkEvent* e : rows) {
    out << to_nanoseconds(e->time) << ',' << to_string(e->kind) << ','
        << e->id << ',' << e->bytes << ','
        << (e->reason ? to_string(*e->reason) : "") << '\n';
  }
}

}  // namespace hoa::netsim
