// Copyright 2026 the smpphat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace smpphat {

/// Deinterleaved multichannel audio, samples normalized to [-1, 1].
struct AudioBuffer {
  double sample_rate = 0.0;
  std::vector<std::vector<double>> channels;

  std::size_t num_channels() const { return channels.size(); }
  std::size_t num_frames() const { return channels.empty() ? 0 : channels.front().size(); }
};

enum class WavFormat { pcm16, pcm24, pcm32, float32 };

namespace detail {

inline std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

inline void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

}  // namespace detail

/// Reads a RIFF/WAVE file. Supports PCM 16/24/32-bit and IEEE float32,
/// including the WAVE_FORMAT_EXTENSIBLE wrapper.
inline AudioBuffer read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open wav file: " + path);
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("not a RIFF/WAVE file: " + path);
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* samples = nullptr;
  std::size_t sample_bytes = 0;

  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const unsigned char* chunk = data.data() + pos;
    const std::uint32_t size = detail::read_u32(chunk + 4);
    const unsigned char* body = chunk + 8;
    if (pos + 8 + size > data.size()) break;
    if (std::memcmp(chunk, "fmt ", 4) == 0 && size >= 16) {
      format = detail::read_u16(body);
      channels = detail::read_u16(body + 2);
      rate = detail::read_u32(body + 4);
      bits = detail::read_u16(body + 14);
      if (format == 0xFFFE && size >= 40) format = detail::read_u16(body + 24);  // extensible
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      samples = body;
      sample_bytes = size;
    }
    pos += 8 + size + (size & 1);
  }
  if (channels == 0 || rate == 0 || samples == nullptr) {
    throw std::runtime_error("missing fmt or data chunk: " + path);
  }
  const bool is_float = format == 3;
  if (!is_float && format != 1) throw std::runtime_error("unsupported wav codec");
  if (is_float && bits != 32) throw std::runtime_error("only 32-bit float wav supported");
  if (!is_float && bits != 16 && bits != 24 && bits != 32) {
    throw std::runtime_error("unsupported pcm bit depth");
  }

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frames = sample_bytes / (bytes_per_sample * channels);
  AudioBuffer audio;
  audio.sample_rate = rate;
  audio.channels.assign(channels, std::vector<double>(frames));
  const unsigned char* p = samples;
  for (std::size_t n = 0; n < frames; ++n) {
    for (std::size_t ch = 0; ch < channels; ++ch) {
      double value = 0.0;
      if (is_float) {
        float f;
        std::memcpy(&f, p, 4);
        value = f;
      } else if (bits == 16) {
        const auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
        value = v / 32768.0;
      } else if (bits == 24) {
        std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
        if (v & 0x800000) v |= ~0xFFFFFF;
        value = v / 8388608.0;
      } else {
        std::int32_t v;
        std::memcpy(&v, p, 4);
        value = v / 2147483648.0;
      }
      audio.channels[ch][n] = value;
      p += bytes_per_sample;
    }
  }
  return audio;
}

inline void write_wav(const std::string& path, const AudioBuffer& audio,
                      WavFormat format = WavFormat::float32) {
  if (audio.channels.empty()) throw std::invalid_argument("no channels to write");
  const std::size_t channels = audio.num_channels();
  const std::size_t frames = audio.num_frames();
  for (const auto& ch : audio.channels) {
    if (ch.size() != frames) throw std::invalid_argument("channels must have equal length");
  }
  std::uint16_t bits = 0, codec = 1;
  switch (format) {
    case WavFormat::pcm16: bits = 16; break;
    case WavFormat::pcm24: bits = 24; break;
    case WavFormat::pcm32: bits = 32; break;
    case WavFormat::float32: bits = 32; codec = 3; break;
  }
  const std::size_t bytes_per_sample = bits / 8;
  const std::uint32_t data_size = static_cast<std::uint32_t>(frames * channels * bytes_per_sample);
  const auto rate = static_cast<std::uint32_t>(audio.sample_rate);

  std::vector<unsigned char> out;
  out.reserve(44 + data_size);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  detail::put_u32(out, 36 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  detail::put_u32(out, 16);
  detail::put_u16(out, codec);
  detail::put_u16(out, static_cast<std::uint16_t>(channels));
  detail::put_u32(out, rate);
  detail::put_u32(out, static_cast<std::uint32_t>(rate * channels * bytes_per_sample));
  detail::put_u16(out, static_cast<std::uint16_t>(channels * bytes_per_sample));
  detail::put_u16(out, bits);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  detail::put_u32(out, data_size);

  auto clamp = [](double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); };
  for (std::size_t n = 0; n < frames; ++n) {
    for (std::size_t ch = 0; ch < channels; ++ch) {
      const double v = audio.channels[ch][n];
      switch (format) {
        case WavFormat::pcm16: {
          const auto s = static_cast<std::int16_t>(std::lround(clamp(v) * 32767.0));
          detail::put_u16(out, static_cast<std::uint16_t>(s));
          break;
        }
        case WavFormat::pcm24: {
          const auto s = static_cast<std::int32_t>(std::lround(clamp(v) * 8388607.0));
          out.push_back(static_cast<unsigned char>(s & 0xff));
          out.push_back(static_cast<unsigned char>((s >> 8) & 0xff));
          out.push_back(static_cast<unsigned char>((s >> 16) & 0xff));
          break;
        }
        case WavFormat::pcm32: {
          const auto s = static_cast<std::int32_t>(std::llround(clamp(v) * 2147483647.0));
          detail::put_u32(out, static_cast<std::uint32_t>(s));
          break;
        }
        case WavFormat::float32: {
          const auto f = static_cast<float>(v);
          std::uint32_t u;
          std::memcpy(&u, &f, 4);
          detail::put_u32(out, u);
          break;
        }
      }
    }
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write wav file: " + path);
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
}

}  // namespace smpphat
