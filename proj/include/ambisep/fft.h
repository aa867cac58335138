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

#ifndef AMBISEP_FFT_H_
#define AMBISEP_FFT_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace ambisep {

// Real-to-complex FFT of size n (power of two not required); returns
// n/2 + 1 bins. Planning is mutex-guarded, execution is thread-safe.
std::vector<std::complex<double>> RealFft(const std::vector<double>& x,
                                          size_t n);

// Inverse of RealFft; returns n real samples (normalized by 1/n).
std::vector<double> InverseRealFft(
    const std::vector<std::complex<double>>& spectrum, size_t n);

size_t NextPowerOfTwo(size_t n);

}  // namespace ambisep

#endif  // AMBISEP_FFT_H_
