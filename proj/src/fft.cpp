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

#include "ambisep/fft.h"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace ambisep {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& PlannerMutex() {
  static std::mutex m;
  return m;
}

}  // namespace

size_t NextPowerOfTwo(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> RealFft(const std::vector<double>& x,
                                          size_t n) {
  if (n == 0) throw std::invalid_argument("fft size must be > 0");
  std::vector<double> in(n, 0.0);
  std::copy(x.begin(), x.begin() + std::min(x.size(), n), in.begin());
  std::vector<std::complex<double>> out(n / 2 + 1);

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan = fftw_plan_dft_r2c_1d(
        static_cast<int>(n), in.data(),
        reinterpret_cast<fftw_complex*>(out.data()),
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  if (plan == nullptr) throw std::runtime_error("fftw plan failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<double> InverseRealFft(
    const std::vector<std::complex<double>>& spectrum, size_t n) {
  if (n == 0) throw std::invalid_argument("fft size must be > 0");
  if (spectrum.size() != n / 2 + 1) {
    throw std::invalid_argument("spectrum size must be n/2 + 1");
  }
  std::vector<std::complex<double>> in = spectrum;
  std::vector<double> out(n);

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(in.data()),
                                out.data(), FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw plan failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return out;
}

}  // namespace ambisep
