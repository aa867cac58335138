/*
Copyright 2026 The Ambisep Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "ambisep/direction.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ambisep {

double WrapAzimuth(double azimuth_rad) {
  if (!std::isfinite(azimuth_rad)) {
    throw std::domain_error("azimuth must be finite");
  }
  double a = azimuth_rad;
  if (a >= kPi || a < -kPi) {
    // remainder() is exact; results land in [-pi, pi].
    a = std::remainder(a, kTwoPi);
  }
  if (a >= kPi) a -= kTwoPi;
  if (a < -kPi) a += kTwoPi;
  return a;
}

Direction::Direction(double azimuth_rad, double zenith_rad)
    : azimuth_(WrapAzimuth(azimuth_rad)), zenith_(zenith_rad) {
  if (!(zenith_rad >= 0.0 && zenith_rad <= kPi)) {
    throw std::domain_error("zenith must lie in [0, pi], got " +
                            std::to_string(zenith_rad));
  }
}

std::array<double, 3> Direction::UnitVector() const {
  const double sz = std::sin(zenith_);
  return {std::cos(azimuth_) * sz, std::sin(azimuth_) * sz,
          std::cos(zenith_)};
}

Direction Direction::FromUnitVector(const std::array<double, 3>& v) {
  const double norm =
      std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (norm < 1e-12) {
    throw std::domain_error("cannot normalize near-zero vector");
  }
  const double z = std::clamp(v[2] / norm, -1.0, 1.0);
  const double zenith = std::acos(z);
  double azimuth = 0.0;
  if (std::abs(v[0]) > 0.0 || std::abs(v[1]) > 0.0) {
    azimuth = std::atan2(v[1], v[0]);
  }
  return Direction(azimuth, zenith);
}

Direction Direction::FromDegrees(double azimuth_deg, double zenith_deg) {
  return Direction(azimuth_deg * kDegToRad, zenith_deg * kDegToRad);
}

Direction Direction::Parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("direction must be \"az_deg,zen_deg\": " +
                                text);
  }
  size_t pos_a = 0, pos_z = 0;
  double az, zen;
  try {
    az = std::stod(text.substr(0, comma), &pos_a);
    zen = std::stod(text.substr(comma + 1), &pos_z);
  } catch (const std::exception&) {
    throw std::invalid_argument("direction must be \"az_deg,zen_deg\": " +
                                text);
  }
  if (pos_a != comma || pos_z != text.size() - comma - 1) {
    throw std::invalid_argument("trailing junk in direction: " + text);
  }
  return FromDegrees(az, zen);
}

double GreatCircle(const Direction& a, const Direction& b) {
  const auto va = a.UnitVector();
  const auto vb = b.UnitVector();
  const double dot =
      va[0] * vb[0] + va[1] * vb[1] + va[2] * vb[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace ambisep
