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

#ifndef AMBISEP_BEAMFORM_H_
#define AMBISEP_BEAMFORM_H_

#include <array>
#include <optional>
#include <vector>

#include "ambisep/audio_buffer.h"
#include "ambisep/direction.h"

namespace ambisep {

enum class BeamLabel { kMaxDi, kMaxRe, kMaxSdr, kCustom };

// A real weight vector over the (N+1)^2 SH channels; the beamformer output
// is s(t) = d^T chi_N(t).
struct BeamWeights {
  int order = 0;
  std::vector<double> d;  // ACN order, size (order+1)^2
  BeamLabel label = BeamLabel::kCustom;
  std::optional<Direction> target;  // set for the steered designs

  void Validate() const;
};

// Plane-wave decomposition: d = y_N(target). Maximal directivity index,
// DI = 10 log10((N+1)^2).
BeamWeights MaxDiWeights(int order, const Direction& target);

// Tapered weights d = diag_N(w_n) y_N(target) with
// w_n = P_n(cos(137.9 deg / (N + 1.51))); maximal energy-vector length.
BeamWeights MaxReWeights(int order, const Direction& target);

// The per-order max-rE taper values w_0..w_N.
std::vector<double> MaxReOrderWeights(int order);

// s(t) = d^T chi_N(t). Requires matching order and orthonormal convention.
MonoBuffer ApplyBeamformer(const BeamWeights& w, const AmbisonicsBuffer& mix);

// g(theta) = d^T y_N(theta).
double BeamPattern(const BeamWeights& w, const Direction& dir);

// 10 log10(4 pi g^2(theta_peak) / integral of g^2), quadrature exact to
// degree 2N (doubling the degree must not change the result). theta_peak is
// the stored target when present, otherwise a dense-grid search plus local
// refinement.
double DirectivityIndex(const BeamWeights& w);

// r_E = integral(g^2(theta) theta) / integral(g^2(theta)), theta as unit
// vector.
std::array<double, 3> ReVector(const BeamWeights& w);

// Peak |g| direction (stored target when available).
Direction BeamPeakDirection(const BeamWeights& w);

struct MaxSdrResult {
  BeamWeights weights;
  bool min_norm_fallback = false;  // rank-deficient covariance at ridge 0
};

// Signal-dependent oracle: d = (C + ridge tr(C)/(N+1)^2 I)^-1 X^T s with
// C = X^T X, via a positive-semidefinite solve. ridge 0 with singular C
// falls back to the minimum-norm least-squares solution.
MaxSdrResult MaxSdrWeights(const AmbisonicsBuffer& mix,
                           const MonoBuffer& reference, double ridge);

// SDR(s, est) = 10 log10(|s|^2 / |s - est|^2), capped at +100 dB when the
// residual is below 1e-10 relative energy. NOT scale-invariant.
double Sdr(const MonoBuffer& s, const MonoBuffer& est);

inline constexpr double kSdrCapDb = 100.0;

}  // namespace ambisep

#endif  // AMBISEP_BEAMFORM_H_
