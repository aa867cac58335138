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
#include "ambisep/rng.h"
#include "ambisep/sh.h"
#include "ambisep/sphere_grids.h"

using namespace ambisep;

namespace {

Direction RandomDirection(Rng& rng) {
  return Direction(rng.Uniform(-kPi, kPi),
                   std::acos(1.0 - 2.0 * rng.Uniform()));
}

// Closed-form associated Legendre values (no Condon-Shortley phase) used as
// an independent oracle for the recurrence.
double AssocLegendreClosedForm(int n, int m, double x) {
  const double s = std::sqrt(1.0 - x * x);
  if (n == 0) return 1.0;
  if (n == 1) return m == 0 ? x : s;
  if (n == 2) {
    if (m == 0) return 0.5 * (3.0 * x * x - 1.0);
    if (m == 1) return 3.0 * x * s;
    return 3.0 * (1.0 - x * x);
  }
  if (n == 3) {
    if (m == 0) return 0.5 * (5.0 * x * x * x - 3.0 * x);
    if (m == 1) return 1.5 * (5.0 * x * x - 1.0) * s;
    if (m == 2) return 15.0 * x * (1.0 - x * x);
    return 15.0 * s * s * s;
  }
  REQUIRE(false);
  return 0.0;
}

// Standard orthonormal real SH table for n <= 2 in Cartesian form.
double ShTable(int n, int m, const std::array<double, 3>& v) {
  const double x = v[0], y = v[1], z = v[2];
  const double k = 1.0 / std::sqrt(4.0 * kPi);
  switch (AcnIndex(n, m)) {
    case 0: return k;
    case 1: return std::sqrt(3.0) * k * y;
    case 2: return std::sqrt(3.0) * k * z;
    case 3: return std::sqrt(3.0) * k * x;
    case 4: return std::sqrt(15.0) * k * x * y;
    case 5: return std::sqrt(15.0) * k * y * z;
    case 6: return std::sqrt(5.0) * k * 0.5 * (3.0 * z * z - 1.0);
    case 7: return std::sqrt(15.0) * k * x * z;
    case 8: return std::sqrt(15.0) * k * 0.5 * (x * x - y * y);
    default: REQUIRE(false); return 0.0;
  }
}

}  // namespace

TEST_CASE("Direction normalizes azimuth and validates zenith") {
  Direction d(3.0 * kPi / 2.0, 0.5);
  CHECK(d.azimuth() == doctest::Approx(-kPi / 2.0).epsilon(1e-15));
  CHECK(Direction(kPi, 0.5).azimuth() == doctest::Approx(-kPi));
  CHECK_THROWS_AS(Direction(0.0, -0.001), std::domain_error);
  CHECK_THROWS_AS(Direction(0.0, kPi + 0.001), std::domain_error);
  CHECK_NOTHROW(Direction(0.0, kPi));
  CHECK_NOTHROW(Direction(0.0, 0.0));
}

TEST_CASE("Direction unit vector has unit norm") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto v = RandomDirection(rng).UnitVector();
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    CHECK(std::abs(norm - 1.0) < 1e-12);
  }
}

TEST_CASE("Direction parse round trip and errors") {
  const Direction d = Direction::Parse("30,90");
  CHECK(d.azimuth() == doctest::Approx(30.0 * kDegToRad));
  CHECK(d.zenith() == doctest::Approx(kPi / 2.0));
  CHECK_THROWS(Direction::Parse("30"));
  CHECK_THROWS(Direction::Parse("30,90,1"));
  CHECK_THROWS(Direction::Parse("abc,90"));
}

TEST_CASE("AssocLegendre spot values") {
  CHECK(AssocLegendre(0, 0, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(AssocLegendre(1, 0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(AssocLegendre(2, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // no Condon-Shortley phase: P_1^1(0) = +1
  CHECK(AssocLegendre(1, 1, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(AssocLegendre(1, 0, 1.5), std::domain_error);
  CHECK_THROWS_AS(AssocLegendre(1, 2, 0.0), std::domain_error);
}

TEST_CASE("AssocLegendre matches closed forms up to n = 3") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = rng.Uniform(-1.0, 1.0);
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= n; ++m) {
        CHECK(AssocLegendre(n, m, x) ==
              doctest::Approx(AssocLegendreClosedForm(n, m, x))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("Legendre spot values") {
  CHECK(Legendre(0, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(Legendre(1, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(Legendre(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK_THROWS_AS(Legendre(-1, 0.0), std::domain_error);
}

TEST_CASE("ShEval order 0 and order cap") {
  const ShVector y = ShEval(0, Direction(1.0, 2.0));
  CHECK(y.size() == 1);
  CHECK(y[0] == doctest::Approx(0.28209479177387814).epsilon(1e-14));
  CHECK_THROWS_AS(ShEval(11, Direction(0.0, 0.0)), std::domain_error);
}

TEST_CASE("ShEval order 1 at the north pole") {
  const ShVector y = ShEval(1, Direction(0.0, 0.0));
  CHECK(y[2] == doctest::Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-12));
  CHECK(y[1] == doctest::Approx(0.0));
  CHECK(y[3] == doctest::Approx(0.0));
}

TEST_CASE("ShEval matches the standard real SH table up to n = 2") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Direction dir = RandomDirection(rng);
    const auto v = dir.UnitVector();
    const ShVector y = ShEval(2, dir);
    for (int n = 0; n <= 2; ++n) {
      for (int m = -n; m <= n; ++m) {
        CHECK(y[AcnIndex(n, m)] ==
              doctest::Approx(ShTable(n, m, v)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("ShEval addition theorem") {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const ShVector y = ShEval(4, RandomDirection(rng));
    for (int n = 0; n <= 4; ++n) {
      double sum = 0.0;
      for (int m = -n; m <= n; ++m) {
        sum += y[AcnIndex(n, m)] * y[AcnIndex(n, m)];
      }
      CHECK(std::abs(sum - (2.0 * n + 1.0) / (4.0 * kPi)) < 1e-10);
    }
  }
}

TEST_CASE("ShEval orthonormality under t-design quadrature") {
  const DirectionSet td = TDesign(8);
  std::vector<ShVector> ys;
  ys.reserve(td.directions.size());
  for (const auto& dir : td.directions) ys.push_back(ShEval(4, dir));
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) {
      double mean = 0.0;
      for (const auto& y : ys) mean += y[i] * y[j];
      mean *= 4.0 * kPi / td.size();
      const double target = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(mean - target) < 1e-9);
    }
  }
}

TEST_CASE("ShEval is bit-identical under exact azimuth wrapping") {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = rng.Uniform(kPi, 3.0 * kPi);
    const double phi = x - kTwoPi;  // exact (Sterbenz)
    const double zen = std::acos(1.0 - 2.0 * rng.Uniform());
    const Direction a(phi, zen);
    const Direction b(x, zen);
    REQUIRE(a.azimuth() == b.azimuth());
    const ShVector ya = ShEval(3, a);
    const ShVector yb = ShEval(3, b);
    for (int c = 0; c < ya.size(); ++c) {
      CHECK(ya[c] == yb[c]);
    }
  }
}

TEST_CASE("GreatCircle spot values") {
  const Direction a(0.3, 1.1);
  CHECK(GreatCircle(a, a) == doctest::Approx(0.0));
  const Direction north(0.0, 0.0);
  const Direction south(0.0, kPi);
  CHECK(GreatCircle(north, south) == doctest::Approx(kPi).epsilon(1e-12));
  const Direction e1(0.0, kPi / 2.0);
  const Direction e2(kPi / 2.0, kPi / 2.0);
  CHECK(GreatCircle(e1, e2) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("GreatCircle is a metric on random triples") {
  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const Direction a = RandomDirection(rng);
    const Direction b = RandomDirection(rng);
    const Direction c = RandomDirection(rng);
    const double ab = GreatCircle(a, b);
    const double ba = GreatCircle(b, a);
    const double ac = GreatCircle(a, c);
    const double cb = GreatCircle(c, b);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-14));
    CHECK(ab >= 0.0);
    CHECK(ab <= ac + cb + 1e-9);
  }
}
