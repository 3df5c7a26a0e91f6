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

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "smpphat/fft.hpp"

namespace smpphat {

enum class Window { rectangular, hann };

inline std::vector<double> make_window(Window window, std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (window == Window::hann) {
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n));
    }
  }
  return w;
}

/// Nonnegative-frequency bins of one analysis frame for every microphone.
struct SpectralFrame {
  std::size_t index = 0;       // frame number t
  std::size_t frame_size = 0;  // N
  std::size_t num_mics = 0;
  std::vector<std::complex<double>> bins;  // num_mics x (N/2+1)

  std::span<const std::complex<double>> mic(std::size_t m) const {
    const std::size_t stride = frame_size / 2 + 1;
    return {bins.data() + m * stride, stride};
  }
};

/// Number of samples spanned by `frames` consecutive analysis frames.
constexpr std::size_t block_span(std::size_t frame_size, std::size_t hop, std::size_t frames) {
  return frame_size + (frames - 1) * hop;
}

/// Short-time transform: frame t covers samples [t*hop, t*hop + frame_size),
/// each channel windowed then transformed, bins 0..N/2 kept. Trailing samples
/// that do not fill a whole frame are dropped.
inline std::vector<SpectralFrame> stft(const std::vector<std::vector<double>>& channels,
                                       std::size_t frame_size, std::size_t hop,
                                       Window window = Window::hann) {
  if (channels.empty()) throw std::invalid_argument("stft needs at least one channel");
  if (!is_pow2(frame_size)) throw std::invalid_argument("frame size must be a power of two");
  if (hop < 1) throw std::invalid_argument("hop must be at least 1");
  const std::size_t length = channels.front().size();
  for (const auto& ch : channels) {
    if (ch.size() != length) throw std::invalid_argument("channels must have equal length");
  }
  if (length < frame_size) throw std::invalid_argument("signal shorter than one frame");

  const std::size_t num_mics = channels.size();
  const std::size_t bins = frame_size / 2 + 1;
  const std::size_t num_frames = (length - frame_size) / hop + 1;
  const std::vector<double> taper = make_window(window, frame_size);
  const Fft& fft = Fft::plan(frame_size);

  std::vector<SpectralFrame> frames(num_frames);
  std::vector<std::complex<double>> buf(frame_size);
  for (std::size_t t = 0; t < num_frames; ++t) {
    SpectralFrame& frame = frames[t];
    frame.index = t;
    frame.frame_size = frame_size;
    frame.num_mics = num_mics;
    frame.bins.resize(num_mics * bins);
    const std::size_t start = t * hop;
    for (std::size_t m = 0; m < num_mics; ++m) {
      const double* x = channels[m].data() + start;
      for (std::size_t i = 0; i < frame_size; ++i) buf[i] = x[i] * taper[i];
      fft.forward(buf);
      for (std::size_t f = 0; f < bins; ++f) frame.bins[m * bins + f] = buf[f];
    }
  }
  return frames;
}

}  // namespace smpphat
