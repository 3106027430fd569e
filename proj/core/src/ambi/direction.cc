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

#include "hoa/ambi/direction.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hoa/error.h"

namespace hoa::ambi {
namespace {

constexpr double kAngleSlack = 1e-12;

double wrap_azimuth(double azimuth) {
  double wrapped = std::fmod(azimuth + kPi, 2.0 * kPi);
  if (wrapped < 0.0) wrapped += 2.0 * kPi;
  wrapped -= kPi;
  // fmod can land exactly on +pi after the shift back.
  if (wrapped >= kPi) wrapped -= 2.0 * kPi;
  return wrapped;
}

}  // namespace

Direction::Direction(double azimuth, double colatitude) {
  if (!std::isfinite(azimuth) || !std::isfinite(colatitude)) {
    throw DomainError("Direction: angles must be finite");
  }
  if (colatitude < -kAngleSlack || colatitude > kPi + kAngleSlack) {
    throw DomainError("Direction: colatitude " + std::to_string(colatitude) +
                      " outside [0, pi]");
  }
  azimuth_ = wrap_azimuth(azimuth);
  colatitude_ = std::clamp(colatitude, 0.0, kPi);
}

Direction Direction::from_azimuth_elevation_deg(double azimuth_deg,
                                                double elevation_deg) {
  if (!std::isfinite(azimuth_deg) || !std::isfinite(elevation_deg)) {
    throw DomainError("Direction: angles must be finite");
  }
  // Fold the elevation into [-180, 180) first, then reflect over the pole.
  double el = std::fmod(elevation_deg + 180.0, 360.0);
  if (el < 0.0) el += 360.0;
  el -= 180.0;
  double az = azimuth_deg;
  if (el > 90.0) {
    el = 180.0 - el;
    az += 180.0;
  } else if (el < -90.0) {
    el = -180.0 - el;
    az += 180.0;
  }
  return Direction(deg_to_rad(az), deg_to_rad(90.0 - el));
}

double Direction::x() const {
  return std::sin(colatitude_) * std::cos(azimuth_);
}
double Direction::y() const {
  return std::sin(colatitude_) * std::sin(azimuth_);
}
double Direction::z() const { return std::cos(colatitude_); }

double angular_distance(const Direction& a, const Direction& b) {
  // atan2 of cross/dot keeps precision for nearly (anti)parallel vectors.
  const double cx = a.y() * b.z() - a.z() * b.y();
  const double cy = a.z() * b.x() - a.x() * b.z();
  const double cz = a.x() * b.y() - a.y() * b.x();
  const double dot = a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

}  // namespace hoa::ambi
