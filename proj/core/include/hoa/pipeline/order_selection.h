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

#ifndef HOA_PIPELINE_ORDER_SELECTION_H_
#define HOA_PIPELINE_ORDER_SELECTION_H_

namespace hoa::pipeline {

struct OrderSelection {
  int order = 0;
  // Even order 0 exceeds the budget; order 0 is sent anyway.
  bool starved = false;
};

// Bits available per packet interval: R_max * T_P.
double packet_budget_bits(double r_max_bps, double packet_interval_s);

// Largest N'' in [0, max_order] whose payload fits in R_max * T_P. Throws
// DomainError if r_max_bps <= 0 or the packet shape is invalid.
OrderSelection select_order(double r_max_bps, double packet_interval_s,
                            int bit_depth, int frame_length, int max_order);

}  // namespace hoa::pipeline

#endif  // HOA_PIPELINE_ORDER_SELECTION_H_
