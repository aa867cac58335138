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

#include "ambisep/sphere_grids.h"

#include <cmath>
#include <stdexcept>

#include "ambisep/tdesign_tables.h"

namespace ambisep {

DirectionSet TDesign(int t) {
  if (t != 8) {
    throw std::invalid_argument("only the 36-point t = 8 design is shipped");
  }
  DirectionSet set;
  set.kind = DirectionSetKind::kTDesign;
  set.directions.reserve(36);
  for (const auto& p : kTDesign8Points) {
    set.directions.push_back(Direction::FromUnitVector({p[0], p[1], p[2]}));
  }
  return set;
}

DirectionSet EquiangularGrid(int n_az, int n_zen) {
  if (n_az < 1 || n_zen < 1) {
    throw std::invalid_argument("grid dimensions must be >= 1");
  }
  DirectionSet set;
  set.kind = DirectionSetKind::kEquiangularGrid;
  set.directions.reserve(static_cast<size_t>(n_az) * n_zen);
  for (int j = 0; j < n_zen; ++j) {
    const double zen = (j + 0.5) * kPi / n_zen;
    for (int i = 0; i < n_az; ++i) {
      const double az = -kPi + i * kTwoPi / n_az;
      set.directions.emplace_back(az, zen);
    }
  }
  return set;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void GaussLegendre(int n, std::vector<double>* nodes,
                   std::vector<double>* weights) {
  nodes->assign(n, 0.0);
  weights->assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    (*nodes)[i] = -x;
    (*weights)[i] = w;
    (*nodes)[n - 1 - i] = x;
    (*weights)[n - 1 - i] = w;
  }
}

}  // namespace

SphereQuadrature MakeSphereQuadrature(int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  const int n_gl = degree / 2 + 1;
  const int n_az = degree + 1;
  std::vector<double> nodes, weights;
  GaussLegendre(n_gl, &nodes, &weights);

  SphereQuadrature q;
  q.directions.reserve(static_cast<size_t>(n_gl) * n_az);
  q.weights.reserve(static_cast<size_t>(n_gl) * n_az);
  const double az_weight = kTwoPi / n_az;
  for (int j = 0; j < n_gl; ++j) {
    const double zen = std::acos(nodes[j]);
    for (int i = 0; i < n_az; ++i) {
      const double az = -kPi + i * kTwoPi / n_az;
      q.directions.emplace_back(az, zen);
      q.weights.push_back(weights[j] * az_weight);
    }
  }
  return q;
}

}  // namespace ambisep
