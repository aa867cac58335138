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

#include "ambisep/encode.h"

#include <stdexcept>

#include "ambisep/convolution.h"
#include "ambisep/sh.h"

namespace ambisep {

AmbisonicsBuffer EncodeAnechoic(
    const std::vector<std::pair<MonoBuffer, Direction>>& sources, int order) {
  if (sources.empty()) throw std::invalid_argument("no sources to encode");
  const double rate = sources.front().first.sample_rate;
  const size_t frames = sources.front().first.size();
  for (const auto& [buf, dir] : sources) {
    if (buf.sample_rate != rate || buf.size() != frames) {
      throw std::invalid_argument("sources must share rate and length");
    }
  }

  AmbisonicsBuffer out = AmbisonicsBuffer::Zeros(order, rate, frames);
  for (const auto& [buf, dir] : sources) {
    const ShVector y = ShEval(order, dir);
    for (int c = 0; c < y.size(); ++c) {
      const double g = y[c];
      auto& channel = out.channels[c];
      for (size_t t = 0; t < frames; ++t) channel[t] += g * buf.samples[t];
    }
  }
  return out;
}

AmbisonicsBuffer EncodeConvolutive(const std::vector<MonoBuffer>& sources,
                                   const ArirSet& arirs) {
  arirs.Validate();
  if (static_cast<int>(sources.size()) != arirs.source_count()) {
    throw std::invalid_argument("source count does not match ARIR count");
  }
  if (sources.empty()) throw std::invalid_argument("no sources to encode");
  const double rate = sources.front().sample_rate;
  const size_t frames = sources.front().size();
  for (const auto& s : sources) {
    if (s.sample_rate != rate || s.size() != frames) {
      throw std::invalid_argument("sources must share rate and length");
    }
  }
  if (arirs.responses.front().sample_rate != rate) {
    throw std::invalid_argument("ARIR rate does not match sources");
  }

  const int order = arirs.responses.front().order;
  AmbisonicsBuffer out = AmbisonicsBuffer::Zeros(order, rate, frames);
  for (size_t k = 0; k < sources.size(); ++k) {
    const auto& arir = arirs.responses[k];
    for (int c = 0; c < out.channel_count(); ++c) {
      const auto conv = Convolve(sources[k].samples, arir.channels[c]);
      auto& channel = out.channels[c];
      for (size_t t = 0; t < frames && t < conv.size(); ++t) {
        channel[t] += conv[t];
      }
    }
  }
  return out;
}

}  // namespace ambisep
