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

#include "hoa/ambi/sphere_design.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "hoa/error.h"

namespace hoa::ambi {
namespace {

// Coefficients c_0..c_n (c_n = 1) of the monic polynomial whose roots have
// power sums p_k = n/(k+1) for even k and 0 for odd k, which are the moments
// an equal-weight rule of n points must reproduce.
std::vector<double> chebyshev_polynomial(int n) {
  std::vector<double> power_sum(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    power_sum[k] = (k % 2 == 0) ? static_cast<double>(n) / (k + 1) : 0.0;
  }
  // Newton's identities for the elementary symmetric polynomials.
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[k - i] * power_sum[i];
    }
    e[k] = acc / k;
  }
  // x^n - e1 x^(n-1) + e2 x^(n-2) - ...
  std::vector<double> coeffs(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    coeffs[n - k] = ((k % 2 == 0) ? 1.0 : -1.0) * e[k];
  }
  return coeffs;
}

double evaluate(const std::vector<double>& c, double x, double* derivative) {
  double value = 0.0;
  double slope = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    slope = slope * x + value;
    value = value * x + c[k];
  }
  if (derivative != nullptr) *derivative = slope;
  return value;
}

}  // namespace

std::vector<double> chebyshev_quadrature_nodes(int n) {
  if (n < 1 || n == 8 || n > 9) {
    throw DomainError("chebyshev_quadrature_nodes: no real rule for n=" +
                      std::to_string(n));
  }
  const std::vector<double> c = chebyshev_polynomial(n);
  if (n == 1) return {0.0};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);

  std::vector<double> nodes;
  nodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> root = solver.eigenvalues()(i);
    if (std::abs(root.imag()) > 1e-6) {
      throw DomainError("chebyshev_quadrature_nodes: complex node for n=" +
                        std::to_string(n));
    }
    double x = root.real();
    for (int iter = 0; iter < 50; ++iter) {
      double slope = 0.0;
      const double value = evaluate(c, x, &slope);
      if (slope == 0.0) break;
      const double step = value / slope;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes.push_back(x);
  }
  std::sort(nodes.begin(), nodes.end());
  // Symmetrize so mirrored rings are exact negatives of each other.
  for (int i = 0; i < n / 2; ++i) {
    const double mag = 0.5 * (nodes[n - 1 - i] - nodes[i]);
    nodes[i] = -mag;
    nodes[n - 1 - i] = mag;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
  return nodes;
}

std::vector<Direction> chebyshev_fourier_design(int order) {
  if (order < 0 || order > 4) {
    throw DomainError("chebyshev_fourier_design: order " +
                      std::to_string(order) + " not in [0, 4]");
  }
  int rings = 1;
  int per_ring = 1;
  if (order >= 1) {
    rings = (order == 4) ? 9 : 2 * order;
    per_ring = (rings % 2 == 0) ? 2 * order : 2 * order + 1;
  }
  const bool stagger = rings % 2 == 0 && per_ring == 2 * order;
  const std::vector<double> nodes = chebyshev_quadrature_nodes(rings);

  std::vector<Direction> points;
  points.reserve(static_cast<std::size_t>(rings) * per_ring);
  const double step = 2.0 * kPi / per_ring;
  // Nodes ascend in cos(colatitude), so iterate from the top ring down.
  for (int r = rings - 1; r >= 0; --r) {
    const double colatitude = std::acos(nodes[r]);
    const double offset = (stagger && r < rings / 2) ? 0.5 * step : 0.0;
    for (int k = 0; k < per_ring; ++k) {
      points.emplace_back(offset + k * step, colatitude);
    }
  }
  return points;
}

}  // namespace hoa::ambi
