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

#ifndef AMBISEP_CONVOLUTION_H_
#define AMBISEP_CONVOLUTION_H_

#include <cstddef>
#include <vector>

namespace ambisep {

// Kernels shorter than this are convolved directly; longer ones via FFT.
inline constexpr size_t kFftKernelThreshold = 128;

// Full linear convolution, length a+b-1. Time-domain reference route.
std::vector<double> ConvolveDirect(const std::vector<double>& a,
                                   const std::vector<double>& b);

// Full linear convolution via a single zero-padded FFT.
std::vector<double> ConvolveFft(const std::vector<double>& a,
                                const std::vector<double>& b);

// Full linear convolution via FFT overlap-add with blocks of
// 4 * kernel length.
std::vector<double> ConvolveOverlapAdd(const std::vector<double>& signal,
                                       const std::vector<double>& kernel);

// Dispatches on kernel length.
std::vector<double> Convolve(const std::vector<double>& signal,
                             const std::vector<double>& kernel);

}  // namespace ambisep

#endif  // AMBISEP_CONVOLUTION_H_
