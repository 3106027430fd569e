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

#include "hoa/ambi/encoder.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hoa/ambi/capsule_array.h"
#include "hoa/ambi/frame.h"
#include "hoa/ambi/loudspeaker_layout.h"
#include "hoa/ambi/spherical_harmonics.h"
#include "hoa/error.h"
#include "oracles.h"

namespace hoa::ambi {
namespace {

std::vector<double> random_signal(std::mt19937_64& rng, int length) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> s(length);
  for (double& x : s) x = u(rng);
  return s;
}

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> az(-kPi, kPi);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Direction(az(rng), std::acos(u(rng)));
}

TEST(EncodeCapsules, ZeroPressureGivesZeroFrame) {
  const CapsuleArray array = CapsuleArray::builtin(3);
  const AmbisonicFrame f =
      encode_capsules(Eigen::MatrixXd::Zero(array.count(), 64), array, 3, 48000.0);
  EXPECT_EQ(f.samples().cwiseAbs().maxCoeff(), 0.0);
}

TEST(EncodeCapsules, ConstantPressureIsOmni) {
  const CapsuleArray array = CapsuleArray::builtin(3);
  const AmbisonicFrame f =
      encode_capsules(Eigen::MatrixXd::Ones(array.count(), 8), array, 3, 48000.0);
  for (int i = 0; i < 8; ++i) {
    EXPECT_NEAR(f.samples()(0, i), std::sqrt(4.0 * std::numbers::pi), 1e-9);
    EXPECT_NEAR(f.samples()(0, i), 3.5449, 1e-4);
    for (int c = 1; c < 16; ++c) EXPECT_NEAR(f.samples()(c, i), 0.0, 1e-6);
  }
}

TEST(EncodeCapsules, BandLimitedPlaneWaveMatchesDirectEncoding) {
  std::mt19937_64 rng(3);
  const CapsuleArray array = CapsuleArray::builtin(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Direction d = random_direction(rng);
    const std::vector<double> s = random_signal(rng, 32);
    // Pressure of an order-3 band-limited plane wave at each capsule.
    Eigen::MatrixXd p(array.count(), 32);
    for (int q = 0; q < array.count(); ++q) {
      double kernel = 0.0;
      for (int n = 0; n <= 3; ++n) {
        for (int m = -n; m <= n; ++m) {
          kernel += hoa::testing::sh_oracle(n, m, d.azimuth(), d.colatitude()) *
                    hoa::testing::sh_oracle(n, m, array.directions()[q].azimuth(),
                                            array.directions()[q].colatitude());
        }
      }
      for (int i = 0; i < 32; ++i) p(q, i) = kernel * s[i];
    }
    const SourceSignal src = SourceSignal::fixed(s, 48000.0, d);
    for (int order = 0; order <= 3; ++order) {
      const AmbisonicFrame a = encode_capsules(p, array, order, 48000.0);
      const AmbisonicFrame b = encode_plane_wave(src, order, 0, 32);
      EXPECT_LT((a.samples() - b.samples()).cwiseAbs().maxCoeff(), 1e-5);
    }
  }
}

TEST(EncodeCapsules, RejectsBadShapes) {
  const CapsuleArray array = CapsuleArray::builtin(3);
  EXPECT_THROW(encode_capsules(Eigen::MatrixXd::Zero(35, 8), array, 3, 48000.0),
               ShapeError);
  EXPECT_THROW(encode_capsules(Eigen::MatrixXd::Zero(36, 8), array, 4, 48000.0),
               OrderError);
}

TEST(EncodePlaneWave, ImpulseAtOrderZero) {
  std::vector<double> s(16, 0.0);
  s[5] = 1.0;
  const AmbisonicFrame f =
      encode_plane_wave(SourceSignal::fixed(s, 48000.0, Direction(0.3, 1.0)), 0, 0, 16);
  ASSERT_EQ(f.channel_count(), 1);
  for (int i = 0; i < 16; ++i) {
    EXPECT_NEAR(f.samples()(0, i), i == 5 ? 1.0 / std::sqrt(4.0 * kPi) : 0.0, 1e-15);
  }
}

TEST(EncodePlaneWave, ZenithSourceOnVerticalChannel) {
  std::mt19937_64 rng(5);
  const std::vector<double> s = random_signal(rng, 64);
  const AmbisonicFrame f =
      encode_plane_wave(SourceSignal::fixed(s, 48000.0, Direction(0.0, 0.0)), 1, 0, 64);
  for (int i = 0; i < 64; ++i) {
    EXPECT_NEAR(f.samples()(acn_index(1, 0), i), s[i] * std::sqrt(3.0 / (4.0 * kPi)), 1e-15);
  }
}

TEST(EncodePlaneWave, FollowsTrajectoryAndWindow) {
  std::vector<double> s(100, 0.5);
  const SourceSignal src(s, 48000.0, [](std::int64_t i) {
    return Direction(0.01 * static_cast<double>(i), kPi / 2);
  });
  const AmbisonicFrame f = encode_plane_wave(src, 2, 40, 20);
  EXPECT_EQ(f.start_index(), 40);
  for (int i = 0; i < 20; ++i) {
    const Direction d(0.01 * (40 + i), kPi / 2);
    EXPECT_DOUBLE_EQ(f.samples()(acn_index(2, -2), i), 0.5 * sh_eval(2, -2, d));
  }
  EXPECT_THROW(encode_plane_wave(src, 2, 90, 20), RangeError);
}

TEST(EncodePlaneWave, MixIsSumOfSources) {
  std::mt19937_64 rng(9);
  std::vector<SourceSignal> scene;
  for (int k = 0; k < 3; ++k) {
    std::vector<double> s = random_signal(rng, 50);
    for (double& x : s) x *= 0.3;
    scene.push_back(SourceSignal::fixed(s, 48000.0, random_direction(rng)));
  }
  const AmbisonicFrame mix = encode_plane_waves(scene, 3, 10, 30);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(16, 30);
  for (const auto& src : scene) sum += encode_plane_wave(src, 3, 10, 30).samples();
  EXPECT_LT((mix.samples() - sum).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(EncodePlaneWave, IsLinearInTheSignal) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coef(-0.5, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const Direction d = random_direction(rng);
    const double a = coef(rng), b = coef(rng);
    std::vector<double> s1 = random_signal(rng, 48), s2 = random_signal(rng, 48);
    for (double& x : s1) x *= 0.5;
    for (double& x : s2) x *= 0.5;
    std::vector<double> mix(48);
    for (int i = 0; i < 48; ++i) mix[i] = a * s1[i] + b * s2[i];
    const Eigen::MatrixXd lhs =
        encode_plane_wave(SourceSignal::fixed(mix, 48000.0, d), 3, 0, 48).samples();
    const Eigen::MatrixXd rhs =
        a * encode_plane_wave(SourceSignal::fixed(s1, 48000.0, d), 3, 0, 48).samples() +
        b * encode_plane_wave(SourceSignal::fixed(s2, 48000.0, d), 3, 0, 48).samples();
    EXPECT_LE((lhs - rhs).norm(), 1e-9 * std::max(1.0, rhs.norm()));
  }
}

TEST(Decoder, OmniFrameGivesEqualPowerOnEverySpeaker) {
  for (int order = 1; order <= 4; ++order) {
    const LoudspeakerLayout layout = LoudspeakerLayout::builtin(order);
    Eigen::MatrixXd w = Eigen::MatrixXd::Ones(1, 16);
    const Eigen::MatrixXd feeds =
        decode_loudspeakers(AmbisonicFrame(0, w, 48000.0, 0), layout);
    const Eigen::VectorXd power = feeds.rowwise().squaredNorm();
    const double mean = power.mean();
    EXPECT_GT(mean, 0.0);
    for (int s = 0; s < layout.speaker_count(); ++s) {
      EXPECT_NEAR(power(s), mean, 1e-9 * mean);
    }
  }
}

TEST(SourceSignal, RejectsOverFullScale) {
  EXPECT_THROW(SourceSignal::fixed({0.5, 1.5}, 48000.0, Direction()), DomainError);
  EXPECT_THROW(SourceSignal::fixed({0.5, NAN}, 48000.0, Direction()), DomainError);
  EXPECT_THROW(SourceSignal::fixed({0.5}, 0.0, Direction()), DomainError);
}

TEST(Frame, TruncateExamples) {
  std::mt19937_64 rng(1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Random(16, 12);
  const AmbisonicFrame f(3, m, 48000.0, 7);
  EXPECT_EQ(truncate_order(f, 3), f);
  const AmbisonicFrame omni = truncate_order(f, 0);
  EXPECT_EQ(omni.channel_count(), 1);
  EXPECT_EQ(omni.samples(), m.topRows(1));
  EXPECT_EQ(omni.start_index(), 7);
  EXPECT_THROW(truncate_order(f, 4), OrderError);
  EXPECT_THROW(truncate_order(f, -1), OrderError);
}

TEST(Frame, TruncationCommutesWithEncoding) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> s = random_signal(rng, 40);
    const SourceSignal src = SourceSignal::fixed(s, 48000.0, random_direction(rng));
    EXPECT_EQ(truncate_order(encode_plane_wave(src, 3, 0, 40), 1),
              encode_plane_wave(src, 1, 0, 40));
  }
}

TEST(Frame, ResidualExamples) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Random(4, 10);
  const AmbisonicFrame f(1, m, 48000.0, 0);
  EXPECT_EQ(high_order_residual(f, 1).samples().cwiseAbs().maxCoeff(), 0.0);
  const AmbisonicFrame h = high_order_residual(f, 0);
  EXPECT_EQ(h.samples().row(0).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(h.samples().bottomRows(3), m.bottomRows(3));
}

TEST(Frame, PadPlusResidualIsIdentity) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int order = 0; order <= 4; ++order) {
    for (int low = 0; low <= order; ++low) {
      Eigen::MatrixXd m(channel_count(order), 17);
      for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
      const AmbisonicFrame f(order, m, 48000.0, 3);
      const Eigen::MatrixXd rebuilt =
          pad_order(truncate_order(f, low), order).samples() +
          high_order_residual(f, low).samples();
      EXPECT_EQ(rebuilt, m);
    }
  }
}

TEST(Frame, ValidatesShape) {
  EXPECT_THROW(AmbisonicFrame(1, Eigen::MatrixXd::Zero(3, 4), 48000.0, 0), ShapeError);
  EXPECT_THROW(AmbisonicFrame(1, Eigen::MatrixXd::Zero(4, 0), 48000.0, 0), ShapeError);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(1, 2);
  bad(0, 1) = INFINITY;
  EXPECT_THROW(AmbisonicFrame(0, bad, 48000.0, 0), DomainError);
  const AmbisonicFrame z = AmbisonicFrame::zeros(2, 5, 48000.0, 1);
  EXPECT_THROW(pad_order(z, 1), OrderError);
}

TEST(Decoder, ReencodingRecoversCoefficients) {
  for (int order = 1; order <= 4; ++order) {
    const LoudspeakerLayout layout = LoudspeakerLayout::builtin(order);
    const Eigen::MatrixXd y = sh_sampling_matrix(layout.directions(), order);
    const int c = channel_count(order);
    EXPECT_LT((y.transpose() * layout.decode_matrix() - Eigen::MatrixXd::Identity(c, c))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-9);
  }
}

TEST(Decoder, ZeroAndOmniFrames) {
  const LoudspeakerLayout layout = LoudspeakerLayout::builtin(3);
  EXPECT_EQ(decode_loudspeakers(AmbisonicFrame::zeros(3, 8, 48000.0, 0), layout)
                .cwiseAbs()
                .maxCoeff(),
            0.0);
  Eigen::MatrixXd w(1, 4);
  w << 0.1, -0.2, 0.3, 0.0;
  const Eigen::MatrixXd feeds =
      decode_loudspeakers(AmbisonicFrame(0, w, 48000.0, 0), layout);
  ASSERT_EQ(feeds.rows(), 36);
  const double gain = feeds(0, 0) / w(0, 0);
  for (int s = 0; s < 36; ++s) {
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(feeds(s, i), gain * w(0, i), 1e-12);
  }
  EXPECT_THROW(decode_loudspeakers(AmbisonicFrame::zeros(4, 8, 48000.0, 0), layout),
               ShapeError);
}

TEST(Decoder, BeamPeaksAtSourceOnDenseGrid) {
  // Dense grid of virtual listening directions; the decoded beam, evaluated as
  // sum_c Y_c(g) a_c, must peak next to the source.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Direction d = random_direction(rng);
    const AmbisonicFrame f =
        encode_plane_wave(SourceSignal::fixed({1.0}, 48000.0, d), 3, 0, 1);
    std::vector<Direction> grid;
    for (int i = 0; i < 90; ++i) {
      for (int j = 0; j < 180; ++j) {
        grid.emplace_back(2.0 * kPi * j / 180 - kPi, kPi * (i + 0.5) / 90);
      }
    }
    const Eigen::VectorXd beam = sh_sampling_matrix(grid, 3) * f.samples().col(0);
    Eigen::Index best;
    beam.maxCoeff(&best);
    EXPECT_LT(angular_distance(grid[best], d), deg_to_rad(3.0));
  }
}

TEST(Decoder, RejectsRankDeficientLayouts) {
  std::vector<Direction> ring;
  for (int i = 0; i < 20; ++i) ring.emplace_back(2.0 * kPi * i / 20 - kPi, kPi / 2);
  EXPECT_THROW(LoudspeakerLayout(ring, 2), ConfigError);
  EXPECT_THROW(LoudspeakerLayout(std::vector<Direction>(3), 1), ConfigError);
}

}  // namespace
}  // namespace hoa::ambi
