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

#ifndef AMBISEP_SPHERE_GRIDS_H_
#define AMBISEP_SPHERE_GRIDS_H_

#include <vector>

#include "ambisep/direction.h"

namespace ambisep {

enum class DirectionSetKind { kTDesign, kEquiangularGrid, kCustom };

struct DirectionSet {
  std::vector<Direction> directions;
  DirectionSetKind kind = DirectionSetKind::kCustom;

  int size() const { return static_cast<int>(directions.size()); }
};

// Spherical t-design: the equal-weight average over the set integrates
// spherical polynomials of degree <= t exactly. Only t = 8 (36 points) is
// shipped; the coordinates are an embedded static table.
DirectionSet TDesign(int t);

// n_az x n_zen grid; azimuth uniform over [-pi, pi) starting at -pi, zenith
// at cell centers of a uniform partition of (0, pi). Row-major: azimuth
// varies fastest.
DirectionSet EquiangularGrid(int n_az, int n_zen);

// Weighted quadrature nodes on the sphere, exact for spherical polynomials
// up to `degree`: Gauss-Legendre in cos(zenith) times a uniform azimuth
// rule. Weights sum to 4 pi.
struct SphereQuadrature {
  std::vector<Direction> directions;
  std::vector<double> weights;
};
SphereQuadrature MakeSphereQuadrature(int degree);

}  // namespace ambisep

#endif  // AMBISEP_SPHERE_GRIDS_H_
