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

#include "ambisep/convolution.h"

#include <algorithm>

#include "ambisep/fft.h"

namespace ambisep {

std::vector<double> ConvolveDirect(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] += ai * b[j];
    }
  }
  return out;
}

std::vector<double> ConvolveFft(const std::vector<double>& a,
                                const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const size_t out_len = a.size() + b.size() - 1;
  const size_t n = NextPowerOfTwo(out_len);
  auto fa = RealFft(a, n);
  const auto fb = RealFft(b, n);
  for (size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  auto full = InverseRealFft(fa, n);
  full.resize(out_len);
  return full;
}

std::vector<double> ConvolveOverlapAdd(const std::vector<double>& signal,
                                       const std::vector<double>& kernel) {
  if (signal.empty() || kernel.empty()) return {};
  const size_t out_len = signal.size() + kernel.size() - 1;
  const size_t block = NextPowerOfTwo(4 * kernel.size());
  if (block >= out_len) return ConvolveFft(signal, kernel);
  const size_t hop = block - kernel.size() + 1;
  const auto kernel_spectrum = RealFft(kernel, block);

  std::vector<double> out(out_len, 0.0);
  std::vector<double> segment;
  for (size_t start = 0; start < signal.size(); start += hop) {
    const size_t len = std::min(hop, signal.size() - start);
    segment.assign(signal.begin() + start, signal.begin() + start + len);
    auto spec = RealFft(segment, block);
    for (size_t i = 0; i < spec.size(); ++i) spec[i] *= kernel_spectrum[i];
    const auto chunk = InverseRealFft(spec, block);
    const size_t copy = std::min(block, out_len - start);
    for (size_t i = 0; i < copy; ++i) out[start + i] += chunk[i];
  }
  return out;
}

std::vector<double> Convolve(const std::vector<double>& signal,
                             const std::vector<double>& kernel) {
  if (kernel.size() < kFftKernelThreshold) {
    return ConvolveDirect(signal, kernel);
  }
  return ConvolveOverlapAdd(signal, kernel);
}

}  // namespace ambisep
