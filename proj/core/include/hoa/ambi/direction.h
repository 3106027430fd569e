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

#ifndef HOA_AMBI_DIRECTION_H_
#define HOA_AMBI_DIRECTION_H_

#include <numbers>

namespace hoa::ambi {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double degrees) { return degrees * (kPi / 180.0); }
constexpr double rad_to_deg(double radians) { return radians * (180.0 / kPi); }

// A point on the unit sphere. Azimuth is measured counter-clockwise from the
// front (+x) in the horizontal plane and kept in [-pi, pi); colatitude is the
// polar angle from the zenith (+z), in [0, pi].
//
// The Legendre argument of the spherical harmonics is cos(colatitude), the
// trigonometric argument is the azimuth.
class Direction {
 public:
  Direction() = default;

  // Throws DomainError if colatitude is outside [0, pi] (a few ulps of
  // rounding are clamped). Azimuth is wrapped into [-pi, pi).
  Direction(double azimuth, double colatitude);

  // Listener convention used by configuration files: azimuth and elevation in
  // degrees, elevation 0 on the horizon and +90 at the zenith. Elevations
  // beyond +/-90 continue over the pole, so elevation 180 at azimuth a is the
  // horizon point at azimuth a + 180.
  static Direction from_azimuth_elevation_deg(double azimuth_deg,
                                              double elevation_deg);

  double azimuth() const { return azimuth_; }
  double colatitude() const { return colatitude_; }
  double elevation() const { return kPi / 2.0 - colatitude_; }

  double x() const;
  double y() const;
  double z() const;

 private:
  double azimuth_ = 0.0;
  double colatitude_ = kPi / 2.0;
};

// Great-circle angle between two directions, in radians.
double angular_distance(const Direction& a, const Direction& b);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_DIRECTION_H_
