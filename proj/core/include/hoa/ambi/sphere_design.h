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

#ifndef HOA_AMBI_SPHERE_DESIGN_H_
#define HOA_AMBI_SPHERE_DESIGN_H_

#include <vector>

#include "hoa/ambi/direction.h"

namespace hoa::ambi {

// Nodes of the n-point Chebyshev (equal-weight) quadrature on [-1, 1],
// ascending. Real nodes exist only for n in {1..7, 9}; throws DomainError
// otherwise. The rule integrates polynomials of degree <= n exactly (n + 1
// for even n, by symmetry).
std::vector<double> chebyshev_quadrature_nodes(int n);

// Equal-weight spherical sampling that integrates every product
// Y_{n,m} Y_{n',m'} with n, n' <= order exactly, so w_q = 4 pi / Q is a valid
// quadrature weight:
//
//  - rings at colatitude acos(x_i), x_i the Chebyshev nodes for 2*order
//    polynomial exactness,
//  - M equally spaced azimuths per ring, with mirrored rings rotated by half a
//    step when M = 2*order so the cos(2*order*az) terms cancel pairwise.
//
// Order 3 yields 36 points (6 rings x 6), order 4 yields 81. Supports
// orders 0..4; throws DomainError beyond that.
std::vector<Direction> chebyshev_fourier_design(int order);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_SPHERE_DESIGN_H_
