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

#include "ambisep/wav_io.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ambisep/sh.h"

namespace ambisep {

namespace {

constexpr uint16_t kFormatIeeeFloat = 3;

void PutU32(std::ostream& os, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  os.write(b, 4);
}

void PutU16(std::ostream& os, uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  os.write(b, 2);
}

uint32_t GetU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t GetU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void WriteWav(const std::string& path,
              const std::vector<std::vector<double>>& tracks,
              double sample_rate) {
  if (tracks.empty()) throw std::invalid_argument("no channels to write");
  const size_t frames = tracks[0].size();
  for (const auto& t : tracks) {
    if (t.size() != frames) throw std::invalid_argument("ragged channels");
  }
  const uint16_t channels = static_cast<uint16_t>(tracks.size());
  const uint32_t rate = static_cast<uint32_t>(std::lround(sample_rate));
  const uint32_t data_bytes =
      static_cast<uint32_t>(frames * channels * sizeof(float));

  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os.write("RIFF", 4);
  PutU32(os, 4 + (8 + 16) + (8 + data_bytes));
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  PutU32(os, 16);
  PutU16(os, kFormatIeeeFloat);
  PutU16(os, channels);
  PutU32(os, rate);
  PutU32(os, rate * channels * sizeof(float));
  PutU16(os, static_cast<uint16_t>(channels * sizeof(float)));
  PutU16(os, 8 * sizeof(float));
  os.write("data", 4);
  PutU32(os, data_bytes);

  std::vector<float> inter(frames * channels);
  for (size_t f = 0; f < frames; ++f) {
    for (uint16_t c = 0; c < channels; ++c) {
      inter[f * channels + c] = static_cast<float>(tracks[c][f]);
    }
  }
  os.write(reinterpret_cast<const char*>(inter.data()),
           static_cast<std::streamsize>(inter.size() * sizeof(float)));
  if (!os) throw std::runtime_error("short write: " + path);
}

WavData ReadWav(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::vector<uint8_t> raw((std::istreambuf_iterator<char>(is)),
                           std::istreambuf_iterator<char>());
  if (raw.size() < 44 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("not a RIFF/WAVE file: " + path);
  }

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t data_off = 0, data_len = 0;
  size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const uint32_t chunk_len = GetU32(raw.data() + pos + 4);
    const uint8_t* body = raw.data() + pos + 8;
    if (std::memcmp(raw.data() + pos, "fmt ", 4) == 0 && chunk_len >= 16) {
      format = GetU16(body);
      channels = GetU16(body + 2);
      rate = GetU32(body + 4);
      bits = GetU16(body + 14);
    } else if (std::memcmp(raw.data() + pos, "data", 4) == 0) {
      data_off = pos + 8;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);
  }
  if (channels == 0 || data_off == 0) {
    throw std::runtime_error("missing fmt/data chunk: " + path);
  }
  if (format != kFormatIeeeFloat || bits != 32) {
    throw std::runtime_error("only 32-bit float WAV is supported: " + path);
  }
  if (data_off + data_len > raw.size()) {
    throw std::runtime_error("truncated data chunk: " + path);
  }

  const size_t frames = data_len / (channels * sizeof(float));
  WavData out;
  out.sample_rate = rate;
  out.tracks.assign(channels, std::vector<double>(frames));
  const uint8_t* p = raw.data() + data_off;
  for (size_t f = 0; f < frames; ++f) {
    for (uint16_t c = 0; c < channels; ++c) {
      float v;
      std::memcpy(&v, p + (f * channels + c) * sizeof(float), sizeof(float));
      out.tracks[c][f] = v;
    }
  }
  return out;
}

void WriteWav(const std::string& path, const MonoBuffer& mono) {
  WriteWav(path, {mono.samples}, mono.sample_rate);
}

MonoBuffer ReadWavMono(const std::string& path) {
  WavData data = ReadWav(path);
  if (data.tracks.size() != 1) {
    throw std::runtime_error("expected mono WAV: " + path);
  }
  return MonoBuffer{std::move(data.tracks[0]), data.sample_rate};
}

void WriteAmbisonicsWav(const std::string& path, const AmbisonicsBuffer& buf) {
  buf.Validate();
  WriteWav(path, buf.channels, buf.sample_rate);
  nlohmann::json meta = {
      {"order", buf.order},
      {"channel_order", "acn"},
      {"convention",
       buf.convention == Convention::kOrthonormal ? "orthonormal"
                                                  : "ambix_sn3d"},
  };
  std::ofstream os(path + ".json");
  if (!os) throw std::runtime_error("cannot write sidecar for " + path);
  os << meta.dump(2) << "\n";
}

AmbisonicsBuffer ReadAmbisonicsWav(const std::string& path) {
  WavData data = ReadWav(path);
  AmbisonicsBuffer buf;
  buf.sample_rate = data.sample_rate;
  buf.channels = std::move(data.tracks);

  const int channels = buf.channel_count();
  int order = 0;
  while (NumShChannels(order) < channels) ++order;
  if (NumShChannels(order) != channels) {
    throw std::runtime_error("channel count is not a square: " + path);
  }
  buf.order = order;

  std::ifstream is(path + ".json");
  if (is) {
    nlohmann::json meta = nlohmann::json::parse(is);
    const std::string conv = meta.value("convention", "orthonormal");
    if (conv == "orthonormal") {
      buf.convention = Convention::kOrthonormal;
    } else if (conv == "ambix_sn3d") {
      buf.convention = Convention::kAmbixSn3d;
    } else {
      throw std::runtime_error("unknown convention in sidecar: " + conv);
    }
    if (meta.contains("order") && meta["order"].get<int>() != order) {
      throw std::runtime_error("sidecar order disagrees with channels: " +
                               path);
    }
  }
  buf.Validate();
  return buf;
}

}  // namespace ambisep
