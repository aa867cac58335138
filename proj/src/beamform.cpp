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

#include "ambisep/beamform.h"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "ambisep/sh.h"
#include "ambisep/sphere_grids.h"

namespace ambisep {

void BeamWeights::Validate() const {
  if (static_cast<int>(d.size()) != NumShChannels(order)) {
    throw std::invalid_argument("weight length does not match order");
  }
  for (double v : d) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite weight");
  }
}

BeamWeights MaxDiWeights(int order, const Direction& target) {
  BeamWeights w;
  w.order = order;
  w.d = ShEval(order, target).coeffs;
  w.label = BeamLabel::kMaxDi;
  w.target = target;
  return w;
}

std::vector<double> MaxReOrderWeights(int order) {
  const double arg_deg = 137.9 / (order + 1.51);
  const double x = std::cos(arg_deg * kDegToRad);
  std::vector<double> w(order + 1);
  for (int n = 0; n <= order; ++n) w[n] = Legendre(n, x);
  return w;
}

BeamWeights MaxReWeights(int order, const Direction& target) {
  BeamWeights w = MaxDiWeights(order, target);
  w.label = BeamLabel::kMaxRe;
  const auto taper = MaxReOrderWeights(order);
  for (int n = 0; n <= order; ++n) {
    for (int m = -n; m <= n; ++m) w.d[AcnIndex(n, m)] *= taper[n];
  }
  return w;
}

MonoBuffer ApplyBeamformer(const BeamWeights& w, const AmbisonicsBuffer& mix) {
  w.Validate();
  mix.Validate();
  if (w.order != mix.order) {
    throw std::invalid_argument("beamformer/mixture order mismatch");
  }
  if (mix.convention != Convention::kOrthonormal) {
    throw std::invalid_argument("beamforming expects orthonormal convention");
  }
  MonoBuffer out;
  out.sample_rate = mix.sample_rate;
  out.samples.assign(mix.frames(), 0.0);
  for (int c = 0; c < mix.channel_count(); ++c) {
    const double dc = w.d[c];
    if (dc == 0.0) continue;
    const auto& channel = mix.channels[c];
    for (size_t t = 0; t < channel.size(); ++t) {
      out.samples[t] += dc * channel[t];
    }
  }
  return out;
}

double BeamPattern(const BeamWeights& w, const Direction& dir) {
  const ShVector y = ShEval(w.order, dir);
  double g = 0.0;
  for (int c = 0; c < y.size(); ++c) g += w.d[c] * y[c];
  return g;
}

Direction BeamPeakDirection(const BeamWeights& w) {
  if (w.target.has_value()) return *w.target;
  // Coarse scan, then three rounds of local grid refinement.
  double best = -1.0;
  Direction best_dir(0.0, kPi / 2.0);
  for (const auto& dir : EquiangularGrid(128, 64).directions) {
    const double g = std::abs(BeamPattern(w, dir));
    if (g > best) {
      best = g;
      best_dir = dir;
    }
  }
  double half_az = kPi / 128.0, half_zen = kPi / 128.0;
  for (int round = 0; round < 3; ++round) {
    const Direction center = best_dir;
    for (int i = -4; i <= 4; ++i) {
      for (int j = -4; j <= 4; ++j) {
        const double zen = center.zenith() + j * half_zen / 4.0;
        if (zen < 0.0 || zen > kPi) continue;
        const Direction dir(center.azimuth() + i * half_az / 4.0, zen);
        const double g = std::abs(BeamPattern(w, dir));
        if (g > best) {
          best = g;
          best_dir = dir;
        }
      }
    }
    half_az /= 4.0;
    half_zen /= 4.0;
  }
  return best_dir;
}

namespace {

struct PatternMoments {
  double power = 0.0;            // integral of g^2
  std::array<double, 3> first;   // integral of g^2 * theta
};

PatternMoments IntegratePattern(const BeamWeights& w, int degree) {
  const SphereQuadrature q = MakeSphereQuadrature(degree);
  PatternMoments mom{0.0, {0.0, 0.0, 0.0}};
  for (size_t i = 0; i < q.directions.size(); ++i) {
    const double g = BeamPattern(w, q.directions[i]);
    const double e = q.weights[i] * g * g;
    mom.power += e;
    const auto v = q.directions[i].UnitVector();
    mom.first[0] += e * v[0];
    mom.first[1] += e * v[1];
    mom.first[2] += e * v[2];
  }
  return mom;
}

}  // namespace

double DirectivityIndex(const BeamWeights& w) {
  w.Validate();
  // g^2 has degree 2N; the first moment integrand degree 2N+1.
  const auto mom = IntegratePattern(w, 2 * w.order + 2);
  if (mom.power <= 0.0) {
    throw std::domain_error("zero-power beam pattern has no DI");
  }
  const double peak = BeamPattern(w, BeamPeakDirection(w));
  return 10.0 * std::log10(4.0 * kPi * peak * peak / mom.power);
}

std::array<double, 3> ReVector(const BeamWeights& w) {
  w.Validate();
  const auto mom = IntegratePattern(w, 2 * w.order + 2);
  if (mom.power <= 0.0) {
    throw std::domain_error("zero-power beam pattern has no energy vector");
  }
  return {mom.first[0] / mom.power, mom.first[1] / mom.power,
          mom.first[2] / mom.power};
}

MaxSdrResult MaxSdrWeights(const AmbisonicsBuffer& mix,
                           const MonoBuffer& reference, double ridge) {
  mix.Validate();
  if (mix.frames() != reference.size()) {
    throw std::invalid_argument("mixture/reference length mismatch");
  }
  if (ridge < 0.0) throw std::invalid_argument("ridge must be >= 0");
  const int channels = mix.channel_count();
  const size_t frames = mix.frames();

  Eigen::MatrixXd x(frames, channels);
  for (int c = 0; c < channels; ++c) {
    for (size_t t = 0; t < frames; ++t) {
      x(static_cast<Eigen::Index>(t), c) = mix.channels[c][t];
    }
  }
  Eigen::VectorXd s(frames);
  for (size_t t = 0; t < frames; ++t) {
    s(static_cast<Eigen::Index>(t)) = reference.samples[t];
  }

  const Eigen::MatrixXd cov = x.transpose() * x;
  const double trace = cov.trace();
  if (trace <= 0.0) throw std::invalid_argument("zero mixture");
  const Eigen::VectorXd rhs = x.transpose() * s;

  MaxSdrResult result;
  result.weights.order = mix.order;
  result.weights.label = BeamLabel::kMaxSdr;

  Eigen::VectorXd d;
  if (ridge > 0.0) {
    Eigen::MatrixXd reg = cov;
    reg.diagonal().array() += ridge * trace / channels;
    d = Eigen::LDLT<Eigen::MatrixXd>(reg).solve(rhs);
  } else {
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(cov);
    if (cod.rank() < channels) {
      // Minimum-norm least squares on the stacked system.
      d = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(x).solve(s);
      result.min_norm_fallback = true;
    } else {
      d = Eigen::LDLT<Eigen::MatrixXd>(cov).solve(rhs);
    }
  }

  result.weights.d.assign(d.data(), d.data() + d.size());
  result.weights.Validate();
  return result;
}

double Sdr(const MonoBuffer& s, const MonoBuffer& est) {
  if (s.size() != est.size()) {
    throw std::invalid_argument("SDR buffers must share length");
  }
  const double ref_energy = s.Energy();
  if (ref_energy <= 0.0) {
    throw std::invalid_argument("SDR reference must be nonzero");
  }
  double residual = 0.0;
  for (size_t t = 0; t < s.size(); ++t) {
    const double r = s.samples[t] - est.samples[t];
    residual += r * r;
  }
  if (residual <= 1e-10 * ref_energy) return kSdrCapDb;
  const double value = 10.0 * std::log10(ref_energy / residual);
  return std::min(value, kSdrCapDb);
}

}  // namespace ambisep
