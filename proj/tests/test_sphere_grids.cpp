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

#include <doctest.h>

#include <cmath>

#include "ambisep/direction.h"
#include "ambisep/sh.h"
#include "ambisep/sphere_grids.h"

using namespace ambisep;

TEST_CASE("TDesign(8) has 36 points and degree-1 exactness") {
  const DirectionSet td = TDesign(8);
  CHECK(td.size() == 36);
  CHECK(td.kind == DirectionSetKind::kTDesign);
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (const auto& d : td.directions) {
    const auto v = d.UnitVector();
    sx += v[0];
    sy += v[1];
    sz += v[2];
  }
  CHECK(std::abs(sx) < 1e-10);
  CHECK(std::abs(sy) < 1e-10);
  CHECK(std::abs(sz) < 1e-10);
  CHECK_THROWS(TDesign(4));
}

TEST_CASE("TDesign(8) integrates all SH of degree 1..8 to zero") {
  const DirectionSet td = TDesign(8);
  std::vector<double> mean(NumShChannels(8), 0.0);
  for (const auto& d : td.directions) {
    const ShVector y = ShEval(8, d);
    for (int c = 0; c < y.size(); ++c) mean[c] += y[c];
  }
  for (int c = 1; c < NumShChannels(8); ++c) {
    CHECK(std::abs(mean[c] / td.size()) < 1e-10);
  }
  // Y_2^1 mean in particular
  CHECK(std::abs(mean[AcnIndex(2, 1)] / td.size()) < 1e-10);
}

TEST_CASE("EquiangularGrid cell-center construction") {
  const DirectionSet g = EquiangularGrid(4, 1);
  REQUIRE(g.size() == 4);
  const double expected_az[] = {-kPi, -kPi / 2.0, 0.0, kPi / 2.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(g.directions[i].azimuth() == doctest::Approx(expected_az[i]));
    CHECK(g.directions[i].zenith() == doctest::Approx(kPi / 2.0));
  }

  const DirectionSet big = EquiangularGrid(100, 50);
  CHECK(big.size() == 5000);
  for (const auto& d : big.directions) {
    CHECK(d.zenith() > 0.0);
    CHECK(d.zenith() < kPi);
  }
  CHECK_THROWS(EquiangularGrid(0, 1));
}

TEST_CASE("SphereQuadrature integrates constants and kills SH") {
  for (int degree : {4, 8, 16}) {
    const SphereQuadrature q = MakeSphereQuadrature(degree);
    double total = 0.0;
    for (double w : q.weights) total += w;
    CHECK(total == doctest::Approx(4.0 * kPi).epsilon(1e-12));

    const int max_n = std::min(degree, kMaxShOrder);
    std::vector<double> acc(NumShChannels(max_n), 0.0);
    for (size_t i = 0; i < q.directions.size(); ++i) {
      const ShVector y = ShEval(max_n, q.directions[i]);
      for (int c = 0; c < y.size(); ++c) acc[c] += q.weights[i] * y[c];
    }
    for (int c = 1; c < NumShChannels(max_n); ++c) {
      CHECK(std::abs(acc[c]) < 1e-10);
    }
  }
}
