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

#include "hoa/pipeline/order_selection.h"

#include <cmath>

#include "hoa/error.h"
#include "hoa/wire/packet.h"

namespace hoa::pipeline {

double packet_budget_bits(double r_max_bps, double packet_interval_s) {
  return r_max_bps * packet_interval_s;
}

OrderSelection select_order(double r_max_bps, double packet_interval_s,
                            int bit_depth, int frame_length, int max_order) {
  if (!(r_max_bps > 0.0)) throw DomainError("select_order: R_max must be > 0");
  if (!(packet_interval_s > 0.0)) {
    throw DomainError("select_order: T_P must be > 0");
  }
  if (max_order < 0) throw DomainError("select_order: negative max order");
  const double budget = packet_budget_bits(r_max_bps, packet_interval_s);
  OrderSelection result;
  result.starved =
      static_cast<double>(wire::payload_size(0, bit_depth, frame_length)) >
      budget;
  for (int n = max_order; n > 0; --n) {
    if (static_cast<double>(wire::payload_size(n, bit_depth, frame_length)) <=
        budget) {
      result.order = n;
      break;
    }
  }
  return result;
}

}  // namespace hoa::pipeline
