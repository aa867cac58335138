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

#ifndef AMBISEP_SH_H_
#define AMBISEP_SH_H_

#include <vector>

#include "ambisep/direction.h"

namespace ambisep {

// Orders above this are rejected; the log-gamma normalization is still
// accurate there but beam design at such orders is out of scope.
inline constexpr int kMaxShOrder = 10;

inline constexpr int NumShChannels(int order) {
  return (order + 1) * (order + 1);
}

// ACN channel index for component (n, m): n^2 + n + m.
inline constexpr int AcnIndex(int n, int m) { return n * n + n + m; }

// Associated Legendre polynomial P_n^m(x) WITHOUT the Condon-Shortley
// phase, 0 <= m <= n, |x| <= 1. P_1^1(x) = sqrt(1 - x^2) is positive.
double AssocLegendre(int n, int m, double x);

// Unassociated Legendre polynomial P_n(x), n >= 0.
double Legendre(int n, double x);

// A stack of real spherical-harmonic coefficients in ACN order.
struct ShVector {
  int order = 0;
  std::vector<double> coeffs;  // size (order+1)^2

  double operator[](int acn) const { return coeffs[acn]; }
  int size() const { return static_cast<int>(coeffs.size()); }
};

// Evaluates the orthonormal real spherical harmonics up to `order` at `dir`,
// ACN order. The Legendre argument is cos(zenith); normalization
// N_nm = sqrt((2n+1)(n-|m|)! / (4 pi (n+|m|)!)) with sqrt(2) for m != 0,
// computed with log-gamma. Y_0^0 = 1/sqrt(4 pi); Y_1^1 is positive toward
// +x (no Condon-Shortley phase).
ShVector ShEval(int order, const Direction& dir);

}  // namespace ambisep

#endif  // AMBISEP_SH_H_
