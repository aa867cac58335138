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

#include "ambisep/sh.h"

#include <cmath>
#include <stdexcept>

namespace ambisep {

namespace {

// P_m^m(x) = (2m-1)!! (1-x^2)^(m/2), then upward recurrence in degree:
// (n-m) P_n^m = (2n-1) x P_{n-1}^m - (n-1+m) P_{n-2}^m.
double AssocLegendreNoCheck(int n, int m, double x) {
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= fact * s;
      fact += 2.0;
    }
  }
  if (n == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;  // P_{m+1}^m
  if (n == m + 1) return pm1;
  double p = 0.0;
  for (int k = m + 2; k <= n; ++k) {
    p = ((2.0 * k - 1.0) * x * pm1 - (k - 1.0 + m) * pmm) / (k - m);
    pmm = pm1;
    pm1 = p;
  }
  return p;
}

double ShNorm(int n, int m) {
  const double log_ratio =
      std::lgamma(n - m + 1.0) - std::lgamma(n + m + 1.0);
  return std::sqrt((2.0 * n + 1.0) / (4.0 * kPi) * std::exp(log_ratio));
}

}  // namespace

double AssocLegendre(int n, int m, double x) {
  if (n < 0 || m < 0 || m > n) {
    throw std::domain_error("AssocLegendre requires 0 <= m <= n");
  }
  if (!(x >= -1.0 && x <= 1.0)) {
    throw std::domain_error("AssocLegendre requires |x| <= 1");
  }
  return AssocLegendreNoCheck(n, m, x);
}

double Legendre(int n, double x) {
  if (n < 0) throw std::domain_error("Legendre requires n >= 0");
  if (n == 0) return 1.0;
  double pm2 = 1.0;
  double pm1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p = ((2.0 * k - 1.0) * x * pm1 - (k - 1.0) * pm2) / k;
    pm2 = pm1;
    pm1 = p;
  }
  return pm1;
}

ShVector ShEval(int order, const Direction& dir) {
  if (order < 0 || order > kMaxShOrder) {
    throw std::domain_error("SH order must lie in [0, " +
                            std::to_string(kMaxShOrder) + "]");
  }
  ShVector out;
  out.order = order;
  out.coeffs.assign(NumShChannels(order), 0.0);

  const double ct = std::cos(dir.zenith());
  const double az = dir.azimuth();
  for (int n = 0; n <= order; ++n) {
    out.coeffs[AcnIndex(n, 0)] = ShNorm(n, 0) * AssocLegendreNoCheck(n, 0, ct);
    for (int m = 1; m <= n; ++m) {
      const double base =
          1.4142135623730950488016887242097 * ShNorm(n, m) *
          AssocLegendreNoCheck(n, m, ct);
      out.coeffs[AcnIndex(n, m)] = base * std::cos(m * az);
      out.coeffs[AcnIndex(n, -m)] = base * std::sin(m * az);
    }
  }
  return out;
}

}  // namespace ambisep
