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

#include "hoa/ambi/spherical_harmonics.h"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hoa/error.h"

namespace hoa::ambi {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void check_order(int n) {
  if (n < 0 || n > kMaxSupportedOrder) {
    throw DomainError("spherical harmonics: order " + std::to_string(n) +
                      " outside [0, " + std::to_string(kMaxSupportedOrder) +
                      "]");
  }
}

// sqrt((2n+1)/(4 pi) * (n-m)!/(n+m)!) for m >= 0.
double normalization(int n, int m) {
  double ratio = 1.0;
  for (int k = n - m + 1; k <= n + m; ++k) ratio /= static_cast<double>(k);
  return std::sqrt((2.0 * n + 1.0) / (4.0 * kPi) * ratio);
}

// Upward recurrence from P_m^m. `sine` is sqrt(1 - x^2), passed separately so
// callers holding the colatitude avoid the cancellation in 1 - cos^2.
double legendre_recurrence(int n, int m, double x, double sine) {
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= static_cast<double>(2 * k - 1) * sine;
  if (n == m) return pmm;
  double pm1 = x * static_cast<double>(2 * m + 1) * pmm;
  if (n == m + 1) return pm1;
  double pm2 = pmm;
  for (int l = m + 2; l <= n; ++l) {
    const double pl = (static_cast<double>(2 * l - 1) * x * pm1 -
                       static_cast<double>(l + m - 1) * pm2) /
                      static_cast<double>(l - m);
    pm2 = pm1;
    pm1 = pl;
  }
  return pm1;
}

double azimuth_factor(int m, double azimuth) {
  if (m > 0) return kSqrt2 * std::cos(m * azimuth);
  if (m < 0) return kSqrt2 * std::sin(-m * azimuth);
  return 1.0;
}

}  // namespace

double associated_legendre(int n, int m, double x) {
  if (n < 0 || m < 0 || m > n) {
    throw DomainError("associated_legendre: need 0 <= m <= n, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("associated_legendre: |x| > 1");
  }
  return legendre_recurrence(n, m, x, std::sqrt((1.0 - x) * (1.0 + x)));
}

double sh_eval(int n, int m, const Direction& dir) {
  check_order(n);
  if (std::abs(m) > n) {
    throw DomainError("sh_eval: |m| > n (n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + ")");
  }
  const int am = std::abs(m);
  const double p = legendre_recurrence(n, am, std::cos(dir.colatitude()),
                                       std::sin(dir.colatitude()));
  return normalization(n, am) * p * azimuth_factor(m, dir.azimuth());
}

int acn_index(int n, int m) {
  if (n < 0 || std::abs(m) > n) {
    throw DomainError("acn_index: |m| > n (n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + ")");
  }
  return n * n + n + m;
}

OrderDegree acn_to_order_degree(int channel) {
  if (channel < 0) throw DomainError("acn_to_order_degree: negative channel");
  const int n = static_cast<int>(std::sqrt(static_cast<double>(channel)));
  // Guard the integer square root against rounding.
  int order = n;
  while (order * order > channel) --order;
  while ((order + 1) * (order + 1) <= channel) ++order;
  return {order, channel - order * order - order};
}

void sh_eval_all(int order, const Direction& dir, std::span<double> out) {
  check_order(order);
  if (out.size() < static_cast<std::size_t>(channel_count(order))) {
    throw ShapeError("sh_eval_all: output span too small");
  }
  const double x = std::cos(dir.colatitude());
  const double sine = std::sin(dir.colatitude());

  // P_n^m for all 0 <= m <= n <= order, row-major in (n, m).
  std::array<double, (kMaxSupportedOrder + 1) * (kMaxSupportedOrder + 1)> p{};
  const int stride = kMaxSupportedOrder + 1;
  double pmm = 1.0;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) pmm *= static_cast<double>(2 * m - 1) * sine;
    p[m * stride + m] = pmm;
    if (m + 1 <= order) {
      p[(m + 1) * stride + m] = x * static_cast<double>(2 * m + 1) * pmm;
    }
    for (int l = m + 2; l <= order; ++l) {
      p[l * stride + m] = (static_cast<double>(2 * l - 1) * x *
                               p[(l - 1) * stride + m] -
                           static_cast<double>(l + m - 1) *
                               p[(l - 2) * stride + m]) /
                          static_cast<double>(l - m);
    }
  }

  const double az = dir.azimuth();
  for (int n = 0; n <= order; ++n) {
    for (int m = -n; m <= n; ++m) {
      const int am = m < 0 ? -m : m;
      out[n * n + n + m] =
          normalization(n, am) * p[n * stride + am] * azimuth_factor(m, az);
    }
  }
}

}  // namespace hoa::ambi
