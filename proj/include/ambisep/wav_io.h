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

#ifndef AMBISEP_WAV_IO_H_
#define AMBISEP_WAV_IO_H_

#include <string>
#include <vector>

#include "ambisep/audio_buffer.h"

namespace ambisep {

// 32-bit float PCM WAV, interleaved. tracks[channel][frame].
struct WavData {
  std::vector<std::vector<double>> tracks;
  double sample_rate = 0.0;
};

WavData ReadWav(const std::string& path);
void WriteWav(const std::string& path,
              const std::vector<std::vector<double>>& tracks,
              double sample_rate);

void WriteWav(const std::string& path, const MonoBuffer& mono);
MonoBuffer ReadWavMono(const std::string& path);

// Ambisonics WAVs carry ACN channel order; the convention is recorded in a
// "<path>.json" sidecar (WAV has no standard field for it).
void WriteAmbisonicsWav(const std::string& path, const AmbisonicsBuffer& buf);
AmbisonicsBuffer ReadAmbisonicsWav(const std::string& path);

}  // namespace ambisep

#endif  // AMBISEP_WAV_IO_H_
