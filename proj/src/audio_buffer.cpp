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

#include "ambisep/audio_buffer.h"

#include <cmath>
#include <stdexcept>

#include "ambisep/direction.h"
#include "ambisep/sh.h"

namespace ambisep {

double MonoBuffer::Energy() const {
  double e = 0.0;
  for (double s : samples) e += s * s;
  return e;
}

double MonoBuffer::Rms() const {
  if (samples.empty()) return 0.0;
  return std::sqrt(Energy() / samples.size());
}

double MonoBuffer::Std() const {
  if (samples.empty()) return 0.0;
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= samples.size();
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  return std::sqrt(var / samples.size());
}

void AmbisonicsBuffer::Validate() const {
  if (channel_count() != NumShChannels(order)) {
    throw std::invalid_argument("channel count does not match (order+1)^2");
  }
  for (const auto& c : channels) {
    if (c.size() != frames()) {
      throw std::invalid_argument("ragged Ambisonics channels");
    }
  }
}

AmbisonicsBuffer AmbisonicsBuffer::Zeros(int order, double sample_rate,
                                         size_t frames) {
  AmbisonicsBuffer buf;
  buf.order = order;
  buf.sample_rate = sample_rate;
  buf.channels.assign(NumShChannels(order), std::vector<double>(frames, 0.0));
  return buf;
}

AmbisonicsBuffer ConvertConvention(const AmbisonicsBuffer& buf,
                                   Convention target) {
  buf.Validate();
  if (buf.convention == target) return buf;

  AmbisonicsBuffer out = buf;
  out.convention = target;
  for (int n = 0; n <= buf.order; ++n) {
    // orthonormal = sn3d * sqrt((2n+1)/(4 pi))
    const double ortho_over_sn3d = std::sqrt((2.0 * n + 1.0) / (4.0 * kPi));
    const double scale = (target == Convention::kAmbixSn3d)
                             ? 1.0 / ortho_over_sn3d
                             : ortho_over_sn3d;
    for (int m = -n; m <= n; ++m) {
      auto& channel = out.channels[AcnIndex(n, m)];
      for (double& s : channel) s *= scale;
    }
  }
  return out;
}

void ArirSet::Validate() const {
  if (responses.empty()) return;
  const int order = responses.front().order;
  const double rate = responses.front().sample_rate;
  for (const auto& r : responses) {
    r.Validate();
    if (r.order != order || r.sample_rate != rate) {
      throw std::invalid_argument("ARIR set must share order and rate");
    }
  }
}

}  // namespace ambisep
