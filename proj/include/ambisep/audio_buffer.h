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

#ifndef AMBISEP_AUDIO_BUFFER_H_
#define AMBISEP_AUDIO_BUFFER_H_

#include <cstddef>
#include <vector>

namespace ambisep {

struct MonoBuffer {
  std::vector<double> samples;
  double sample_rate = 0.0;

  size_t size() const { return samples.size(); }
  double Rms() const;
  double Energy() const;  // sum of squares
  double Std() const;     // population standard deviation
};

// Channel scaling convention of an SH-domain buffer. kOrthonormal means the
// channels are coefficients over the orthonormal real SH basis (the omni
// channel of a unit source is 1/sqrt(4 pi)); kAmbixSn3d is AmbiX/SN3D where
// the omni channel of a unit source is 1.
enum class Convention { kOrthonormal, kAmbixSn3d };

// Multichannel SH-domain audio, ACN channel order, channels[acn][t].
struct AmbisonicsBuffer {
  int order = 0;
  double sample_rate = 0.0;
  Convention convention = Convention::kOrthonormal;
  std::vector<std::vector<double>> channels;

  size_t frames() const { return channels.empty() ? 0 : channels[0].size(); }
  int channel_count() const { return static_cast<int>(channels.size()); }

  // Throws unless channel count matches (order+1)^2 and all channels share
  // one length.
  void Validate() const;

  static AmbisonicsBuffer Zeros(int order, double sample_rate, size_t frames);
};

// Per-channel scaling between conventions; a round trip is the identity.
// The per-order ratio orthonormal/SN3D is sqrt((2n+1)/(4 pi)).
AmbisonicsBuffer ConvertConvention(const AmbisonicsBuffer& buf,
                                   Convention target);

// SH-domain directional room impulse responses, one per source.
struct ArirSet {
  std::vector<AmbisonicsBuffer> responses;

  int source_count() const { return static_cast<int>(responses.size()); }
  void Validate() const;  // shared order and sample rate
};

}  // namespace ambisep

#endif  // AMBISEP_AUDIO_BUFFER_H_
