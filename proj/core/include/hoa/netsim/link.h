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

#ifndef HOA_NETSIM_LINK_H_
#define HOA_NETSIM_LINK_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hoa/netsim/rng.h"

namespace hoa::netsim {

// Capacity takes `capacity_bps` from `time` (seconds) onwards.
struct CapacityStep {
  double time = 0.0;
  double capacity_bps = 0.0;

  bool operator==(const CapacityStep&) const = default;
};

struct LinkConfig {
  double capacity_bps = 13e6;  // before the first schedule step
  std::vector<CapacityStep> schedule;
  std::size_t queue_limit_bytes = 64 * 1024;
  double propagation_delay = 0.020;
  double jitter_stddev = 0.0;
  double loss_probability = 0.0;
  std::uint64_t rng_seed = 0;

  // Throws DomainError on a non-positive capacity, non-increasing schedule
  // times, negative delays or a loss probability outside [0, 1].
  void validate() const;
};

enum class DropReason { kQueueOverflow, kRandomLoss };
const char* to_string(DropReason reason);

struct SubmitResult {
  std::uint64_t id = 0;
  bool admitted = false;
  double departure_time = 0.0;  // meaningful when admitted
};

struct Delivery {
  std::uint64_t id = 0;
  double time = 0.0;
  std::vector<std::uint8_t> bytes;
};

struct LinkEvent {
  enum class Kind { kSubmit, kDepart, kDeliver, kDrop };

  Kind kind;
  double time;
  std::uint64_t id;
  std::size_t bytes;
  std::optional<DropReason> reason;
};
const char* to_string(LinkEvent::Kind kind);

struct LinkStats {
  std::uint64_t submitted = 0;
  std::uint64_t delivered = 0;
  std::uint64_t queue_overflow = 0;
  std::uint64_t random_loss = 0;
  std::uint64_t in_flight = 0;
};

// Simplex link: drop-tail FIFO byte queue served at capacity(t), followed by
// a fixed propagation delay plus half-normal jitter and Bernoulli loss.
//
// Each admitted packet takes one loss draw and one jitter draw (the latter
// only when jitter_stddev > 0) from separate seeded streams, in submission
// order, so a trace depends only on (config, submission sequence).
class Link {
 public:
  explicit Link(LinkConfig config);

  const LinkConfig& config() const { return config_; }

  // Replaces the schedule. Already admitted packets keep their departure
  // times. Throws DomainError on non-increasing times or capacity <= 0.
  void set_capacity_schedule(std::vector<CapacityStep> schedule);

  // Right-continuous step function.
  double capacity_at(double t) const;
  // Integral of capacity over [t0, t1] in bits.
  double capacity_integral(double t0, double t1) const;

  // Throws ClockRegressionError if `now` precedes the previous submit.
  SubmitResult submit(std::vector<std::uint8_t> bytes, double now);

  // Removes and returns every packet delivered at or before `until`, ordered
  // by (delivery time, id). Random losses whose departure is at or before
  // `until` are resolved and logged.
  std::vector<Delivery> deliveries(double until);

  // Bytes of admitted packets whose departure time is after `now`.
  std::size_t queued_bytes(double now) const;

  // Earliest pending delivery time, if any packet is still in flight.
  std::optional<double> next_delivery_time() const;

  const LinkStats& stats() const { return stats_; }
  const std::vector<LinkEvent>& events() const { return events_; }

  // CSV `time_ns,event,packet_id,bytes,reason`, rows stably sorted by time.
  void write_event_csv(std::ostream& out) const;

 private:
  struct InFlight {
    std::uint64_t id;
    std::vector<std::uint8_t> bytes;
    double departure_time;
    double delivery_time;
    bool lost;
    bool departed_logged = false;
  };

  LinkConfig config_;
  SplitMix64 loss_rng_;
  SplitMix64 jitter_rng_;
  std::deque<InFlight> in_flight_;  // submission order
  double last_departure_ = 0.0;
  std::optional<double> last_submit_;
  std::uint64_t next_id_ = 0;
  LinkStats stats_;
  std::vector<LinkEvent> events_;
};

// Seconds to integer nanoseconds, rounded to nearest.
std::int64_t to_nanoseconds(double seconds);

}  // namespace hoa::netsim

#endif  // HOA_NETSIM_LINK_H_
