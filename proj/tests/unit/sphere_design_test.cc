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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hoa/ambi/capsule_array.h"
#include "hoa/ambi/layout_io.h"
#include "hoa/ambi/spherical_harmonics.h"
#include "hoa/error.h"

namespace hoa::ambi {
namespace {

// Brute-force Gram matrix straight from sh_eval.
Eigen::MatrixXd brute_gram(const CapsuleArray& array, int order) {
  const int c = channel_count(order);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(c, c);
  for (int i = 0; i < c; ++i) {
    const OrderDegree a = acn_to_order_degree(i);
    for (int j = 0; j < c; ++j) {
      const OrderDegree b = acn_to_order_degree(j);
      for (int q = 0; q < array.count(); ++q) {
        g(i, j) += array.weights()[q] * sh_eval(a.n, a.m, array.directions()[q]) *
                   sh_eval(b.n, b.m, array.directions()[q]);
      }
    }
  }
  return g;
}

TEST(ChebyshevNodes, IntegrateMonomials) {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 9}) {
    const std::vector<double> x = chebyshev_quadrature_nodes(n);
    ASSERT_EQ(static_cast<int>(x.size()), n);
    for (int k = 0; k <= n; ++k) {
      double sum = 0.0;
      for (double xi : x) sum += std::pow(xi, k);
      const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
      EXPECT_NEAR(sum * 2.0 / n, exact, 1e-10) << "n=" << n << " k=" << k;
    }
  }
  EXPECT_THROW(chebyshev_quadrature_nodes(8), DomainError);
  EXPECT_THROW(chebyshev_quadrature_nodes(0), DomainError);
}

TEST(Design, PointCounts) {
  EXPECT_EQ(chebyshev_fourier_design(3).size(), 36u);
  EXPECT_EQ(chebyshev_fourier_design(4).size(), 81u);
  EXPECT_THROW(chebyshev_fourier_design(5), DomainError);
}

TEST(CapsuleArray, BuiltinIsOrthonormalQuadrature) {
  for (int order = 1; order <= 4; ++order) {
    const CapsuleArray array = CapsuleArray::builtin(order);
    const Eigen::MatrixXd g = brute_gram(array, order);
    const int c = channel_count(order);
    EXPECT_LT((g - Eigen::MatrixXd::Identity(c, c)).cwiseAbs().maxCoeff(), 1e-6)
        << "order " << order;
    double total = 0.0;
    for (double w : array.weights()) total += w;
    EXPECT_NEAR(total, 4.0 * std::numbers::pi, 1e-9);
  }
}

TEST(CapsuleArray, CrossTermVanishes) {
  const CapsuleArray array = CapsuleArray::builtin(3);
  double sum = 0.0;
  for (int q = 0; q < array.count(); ++q) {
    sum += array.weights()[q] * sh_eval(1, 1, array.directions()[q]) *
           sh_eval(1, -1, array.directions()[q]);
  }
  EXPECT_NEAR(sum, 0.0, 1e-6);
}

TEST(CapsuleArray, RejectsInvalidLayouts) {
  const std::vector<Direction> few(4, Direction(0.0, 1.0));
  EXPECT_THROW(CapsuleArray(few, std::vector<double>(4, std::numbers::pi), 1),
               ConfigError);
  std::vector<Direction> design = chebyshev_fourier_design(3);
  EXPECT_THROW(CapsuleArray(design, std::vector<double>(36, 1.0), 3), ConfigError);
  EXPECT_THROW(CapsuleArray(design, std::vector<double>(35, 4.0 * std::numbers::pi / 35), 3),
               ConfigError);
  // A design exact at order 1 only cannot carry order 3 (the Gram check fails).
  const std::vector<Direction> low = chebyshev_fourier_design(1);
  std::vector<Direction> padded = low;
  while (padded.size() < 16) padded.push_back(low[padded.size() % low.size()]);
  EXPECT_THROW(CapsuleArray(padded,
                            std::vector<double>(padded.size(),
                                                4.0 * std::numbers::pi / padded.size()),
                            3),
               ConfigError);
}

TEST(LayoutIo, ParsesCapsulesAndReportsFieldPaths) {
  const std::vector<Direction> design = chebyshev_fourier_design(1);
  nlohmann::json doc = {{"order", 1}, {"directions", nlohmann::json::array()}};
  for (const Direction& d : design) {
    doc["directions"].push_back({{"azimuth_deg", rad_to_deg(d.azimuth())},
                                 {"colatitude_deg", rad_to_deg(d.colatitude())},
                                 {"weight", 4.0 * std::numbers::pi / design.size()}});
  }
  const CapsuleArray parsed = parse_capsule_array(doc.dump());
  EXPECT_EQ(parsed.count(), static_cast<int>(design.size()));
  EXPECT_EQ(parsed.order_limit(), 1);

  try {
    parse_capsule_array(R"({"order": 1, "directions": [{"azimuth_deg": 0}]})");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "directions[0].colatitude_deg");
  }
  try {
    parse_loudspeaker_layout(R"({"order": 1, "directions": [{"azimuth_deg": 0, "colatitude_deg": 200}]})");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "directions[0].colatitude_deg");
  }
  EXPECT_THROW(parse_loudspeaker_layout("not json"), ConfigError);
  EXPECT_THROW(load_loudspeaker_layout("/nonexistent/layout.json"), ConfigError);
}

}  // namespace
}  // namespace hoa::ambi
