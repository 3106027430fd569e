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

#ifndef HOA_AMBI_SPHERICAL_HARMONICS_H_
#define HOA_AMBI_SPHERICAL_HARMONICS_H_

#include <span>

#include "hoa/ambi/direction.h"

namespace hoa::ambi {

// Highest order the library evaluates. The wire header caps transmitted
// orders at 15; the math is validated against closed forms well past the
// orders used in practice.
inline constexpr int kMaxSupportedOrder = 15;

// Number of Ambisonics channels for order N: (N + 1)^2.
constexpr int channel_count(int order) { return (order + 1) * (order + 1); }

// Associated Legendre function P_n^m(x) without the Condon-Shortley phase.
// Evaluated by upward recurrence in n starting from
// P_m^m(x) = (2m - 1)!! (1 - x^2)^(m/2).
// Throws DomainError unless 0 <= m <= n and |x| <= 1.
double associated_legendre(int n, int m, double x);

// Real spherical harmonic Y_{n,m} with orthonormal N3D normalization
// (integral of Y^2 over the sphere is 1, so Y_{0,0} = 1/sqrt(4 pi)):
//
//   Y_{n,m} = sqrt((2n+1)/(4 pi) (n-|m|)!/(n+|m|)!) P_n^|m|(cos colat) T_m(az)
//
// with T_0 = 1, T_m = sqrt(2) cos(m az) for m > 0 and
// T_m = sqrt(2) sin(|m| az) for m < 0. No Condon-Shortley phase.
// Throws DomainError unless |m| <= n.
double sh_eval(int n, int m, const Direction& dir);

// Ambisonic Channel Number n^2 + n + m. Throws DomainError unless |m| <= n.
int acn_index(int n, int m);

// Inverse of acn_index: channel -> (n, m).
struct OrderDegree {
  int n;
  int m;
};
OrderDegree acn_to_order_degree(int channel);

// Evaluates every harmonic up to `order` at `dir` into `out` in ACN order.
// `out` must hold at least channel_count(order) values. Same values as
// sh_eval, computed with one shared Legendre recurrence.
void sh_eval_all(int order, const Direction& dir, std::span<double> out);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_SPHERICAL_HARMONICS_H_
