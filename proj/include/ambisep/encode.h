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

#ifndef AMBISEP_ENCODE_H_
#define AMBISEP_ENCODE_H_

#include <utility>
#include <vector>

#include "ambisep/audio_buffer.h"
#include "ambisep/direction.h"

namespace ambisep {

// Instantaneous far-field encoding: chi_N(t) = sum_k s_k(t) * y_N(theta_k).
// No delays, no distance gains. All sources must share rate and length.
AmbisonicsBuffer EncodeAnechoic(
    const std::vector<std::pair<MonoBuffer, Direction>>& sources, int order);

// Convolutive encoding: chi_N(t) = sum_k s_k(t) * h_k(t), per-channel linear
// convolution trimmed to the dry-signal length so ground truth stays
// sample-synchronous.
AmbisonicsBuffer EncodeConvolutive(const std::vector<MonoBuffer>& sources,
                                   const ArirSet& arirs);

}  // namespace ambisep

#endif  // AMBISEP_ENCODE_H_
