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

#ifndef AMBISEP_DIRECTION_H_
#define AMBISEP_DIRECTION_H_

#include <array>
#include <string>

namespace ambisep {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

// A point on the unit sphere. Azimuth is measured counterclockwise from +x
// in the xy-plane and is normalized into [-pi, pi) on construction; zenith
// is measured from +z and must lie in [0, pi] (out-of-range zenith is a
// construction error, not a clamp).
class Direction {
 public:
  Direction(double azimuth_rad, double zenith_rad);

  double azimuth() const { return azimuth_; }
  double zenith() const { return zenith_; }

  // Unit vector [cos(az) sin(zen), sin(az) sin(zen), cos(zen)].
  std::array<double, 3> UnitVector() const;

  static Direction FromUnitVector(const std::array<double, 3>& v);
  static Direction FromDegrees(double azimuth_deg, double zenith_deg);

  // Parses the CLI text form "az_deg,zen_deg".
  static Direction Parse(const std::string& text);

  bool operator==(const Direction& other) const {
    return azimuth_ == other.azimuth_ && zenith_ == other.zenith_;
  }

 private:
  double azimuth_;
  double zenith_;
};

// Normalizes an angle into [-pi, pi). Exact for inputs already in range and
// for inputs one exact period away from an in-range value.
double WrapAzimuth(double azimuth_rad);

// Great-circle angle between two directions, in [0, pi]. arccos of the
// clamped dot product of the unit vectors.
double GreatCircle(const Direction& a, const Direction& b);

}  // namespace ambisep

#endif  // AMBISEP_DIRECTION_H_
