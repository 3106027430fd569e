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

#ifndef HOA_NETSIM_RNG_H_
#define HOA_NETSIM_RNG_H_

#include <cstdint>

namespace hoa::netsim {

// SplitMix64 (Steele, Lea, Flood 2014). The exact arithmetic is written down
// in docs/rng.md so traces can be reproduced by other implementations.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64();
  // (next_u64() >> 11) * 2^-53, in [0, 1).
  double uniform();
  // Box-Muller, cosine branch only; consumes two uniforms per call.
  double normal();
  // uniform() < p.
  bool bernoulli(double p);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// SplitMix64 output function applied to a single value.
std::uint64_t mix64(std::uint64_t z);

// Independent stream derived from a user seed: initial state
// mix64(seed + (stream_id + 1) * kGamma).
SplitMix64 make_stream(std::uint64_t seed, std::uint64_t stream_id);

inline constexpr std::uint64_t kLossStream = 1;
inline constexpr std::uint64_t kJitterStream = 2;

}  // namespace hoa::netsim

#endif  // HOA_NETSIM_RNG_H_
