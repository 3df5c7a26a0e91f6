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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "smpphat/fft.hpp"
#include "smpphat/geometry.hpp"
#include "smpphat/rng.hpp"
#include "smpphat/vec3.hpp"

namespace smpphat {

/// Shoebox room for image-method simulation. Walls share one absorption
/// coefficient derived from rt60 via Sabine's formula.
struct RoomConfig {
  Vec3 dims{10.0, 10.0, 3.0};
  double rt60 = 0.3;   // seconds
  double fs = 16000.0;
  double c = 343.0;
  int max_order = 6;   // reflections per axis
};

inline void validate_room(const RoomConfig& room) {
  if (room.dims.x <= 0.0 || room.dims.y <= 0.0 || room.dims.z <= 0.0) {
    throw std::invalid_argument("room dimensions must be positive");
  }
  if (room.rt60 <= 0.0 || room.rt60 > 2.0) throw std::invalid_argument("rt60 must be in (0, 2]");
  if (room.max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
  if (room.fs <= 0.0 || room.c <= 0.0) throw std::invalid_argument("fs and c must be positive");
}

/// Sabine inversion: alpha = 0.161 V / (rt60 S). Throws when the requested
/// rt60 is shorter than this room can physically produce (alpha > 1).
inline double sabine_absorption(const RoomConfig& room) {
  validate_room(room);
  const double volume = room.dims.x * room.dims.y * room.dims.z;
  const double surface = 2.0 * (room.dims.x * room.dims.y + room.dims.x * room.dims.z +
                                room.dims.y * room.dims.z);
  const double alpha = 0.161 * volume / (room.rt60 * surface);
  if (alpha > 1.0) {
    throw std::invalid_argument("rt60 too short for this room: Sabine absorption exceeds 1");
  }
  return alpha;
}

namespace detail {

inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// 81-tap Hann-windowed sinc centered on the fractional delay.
constexpr int kSincHalfWidth = 40;

inline void add_fractional_impulse(std::vector<double>& h, double delay, double gain) {
  const auto lo = static_cast<std::int64_t>(std::ceil(delay - kSincHalfWidth));
  const auto hi = static_cast<std::int64_t>(std::floor(delay + kSincHalfWidth));
  for (std::int64_t n = std::max<std::int64_t>(lo, 0); n <= hi; ++n) {
    if (n >= static_cast<std::int64_t>(h.size())) break;
    const double t = static_cast<double>(n) - delay;
    const double w = 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * t / 81.0));
    h[static_cast<std::size_t>(n)] += gain * w * sinc(t);
  }
}

inline void check_inside(const RoomConfig& room, const Vec3& p, const char* what) {
  if (p.x <= 0.0 || p.x >= room.dims.x || p.y <= 0.0 || p.y >= room.dims.y || p.z <= 0.0 ||
      p.z >= room.dims.z) {
    throw std::invalid_argument(std::string(what) + " outside the room");
  }
}

}  // namespace detail

/// Image-method impulse response between a source and one microphone. Each
/// image contributes an attenuated, fractionally delayed impulse with gain
/// beta^(reflections) / (4 pi distance); the response is truncated at
/// max_order reflections per axis and at the direct delay plus rt60 (the
/// point where a Sabine-matched tail has decayed 60 dB).
inline std::vector<double> compute_rir(const RoomConfig& room, const Vec3& src, const Vec3& mic) {
  detail::check_inside(room, src, "source");
  detail::check_inside(room, mic, "microphone");
  const double alpha = sabine_absorption(room);
  const double beta = std::sqrt(std::max(0.0, 1.0 - alpha));

  const double direct = distance(src, mic);
  const std::size_t length = static_cast<std::size_t>(
      std::ceil((direct / room.c + room.rt60) * room.fs)) + detail::kSincHalfWidth + 1;
  std::vector<double> h(length, 0.0);

  const int order = room.max_order;
  const int m_hi = order / 2 + 1;
  const double dims[3] = {room.dims.x, room.dims.y, room.dims.z};
  const double s[3] = {src.x, src.y, src.z};
  const double r[3] = {mic.x, mic.y, mic.z};
  const double samples_per_meter = room.fs / room.c;

  for (int mx = -m_hi; mx <= m_hi; ++mx) {
    for (int qx = 0; qx <= 1; ++qx) {
      const int refl_x = std::abs(2 * mx - qx);
      if (refl_x > order) continue;
      const double dx = (1 - 2 * qx) * s[0] + 2.0 * mx * dims[0] - r[0];
      for (int my = -m_hi; my <= m_hi; ++my) {
        for (int qy = 0; qy <= 1; ++qy) {
          const int refl_y = std::abs(2 * my - qy);
          if (refl_y > order) continue;
          const double dy = (1 - 2 * qy) * s[1] + 2.0 * my * dims[1] - r[1];
          for (int mz = -m_hi; mz <= m_hi; ++mz) {
            for (int qz = 0; qz <= 1; ++qz) {
              const int refl_z = std::abs(2 * mz - qz);
              if (refl_z > order) continue;
              const double dz = (1 - 2 * qz) * s[2] + 2.0 * mz * dims[2] - r[2];
              const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
              const double delay = dist * samples_per_meter;
              if (delay - detail::kSincHalfWidth >= static_cast<double>(length)) continue;
              const double gain = std::pow(beta, refl_x + refl_y + refl_z) /
                                  (4.0 * std::numbers::pi * std::max(dist, 1e-3));
              detail::add_fractional_impulse(h, delay, gain);
            }
          }
        }
      }
    }
  }
  return h;
}

/// Placement of one simulated measurement: array center at 1 m height,
/// source at 2 m, both at least 0.5 m from every wall and at least 1 m apart.
struct TrialSetup {
  Vec3 array_center;
  Vec3 source_pos;
  Vec3 truth;  // unit vector from array center toward the source
  std::uint64_t noise_seed = 0;
};

inline void validate_trial_setup(const RoomConfig& room, const TrialSetup& setup) {
  constexpr double kMargin = 0.5;
  auto check_margin = [&](const Vec3& p, const char* what) {
    if (p.x < kMargin || p.x > room.dims.x - kMargin || p.y < kMargin ||
        p.y > room.dims.y - kMargin || p.z < kMargin || p.z > room.dims.z - kMargin) {
      throw std::invalid_argument(std::string(what) + " violates the 0.5 m wall margin");
    }
  };
  check_margin(setup.array_center, "array center");
  check_margin(setup.source_pos, "source");
  if (std::abs(setup.truth.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("truth direction must be a unit vector");
  }
  if (distance(setup.array_center, setup.source_pos) < 1.0) {
    throw std::invalid_argument("source must be at least 1 m from the array");
  }
}

inline TrialSetup sample_trial_setup(const RoomConfig& room, Rng& rng) {
  constexpr double kMargin = 0.5;
  TrialSetup setup;
  setup.array_center = {rng.uniform(kMargin, room.dims.x - kMargin),
                        rng.uniform(kMargin, room.dims.y - kMargin), 1.0};
  do {
    setup.source_pos = {rng.uniform(kMargin, room.dims.x - kMargin),
                        rng.uniform(kMargin, room.dims.y - kMargin), 2.0};
  } while (distance(setup.array_center, setup.source_pos) < 1.0);
  setup.truth = (setup.source_pos - setup.array_center).normalized();
  setup.noise_seed = rng.next();
  return setup;
}

/// Sample count of the default localization block (frame 512, hop 256, 8
/// frames); simulate_trial rejects durations shorter than this unless the
/// caller passes its own minimum.
constexpr std::size_t kDefaultBlockSamples = 512 + 7 * 256;

/// Synthesizes what the array hears: seeded white Gaussian noise at the
/// source convolved with the image-method response to each microphone. The
/// array is translated to the trial's center; output is one channel per mic,
/// duration_sec long. Deterministic given the setup's noise seed.
inline std::vector<std::vector<double>> simulate_trial(const RoomConfig& room,
                                                       const MicArray& array,
                                                       const TrialSetup& setup,
                                                       double duration_sec,
                                                       std::size_t min_samples = kDefaultBlockSamples) {
  validate_room(room);
  validate_array(array);
  validate_trial_setup(room, setup);
  const auto num_samples = static_cast<std::size_t>(std::llround(duration_sec * room.fs));
  if (num_samples < min_samples) {
    throw std::invalid_argument("duration shorter than one localization block");
  }

  Rng rng(setup.noise_seed);
  std::vector<double> noise(num_samples);
  for (auto& sample : noise) sample = rng.gaussian();

  // One forward transform of the source signal, reused for every microphone.
  std::vector<std::vector<double>> rirs;
  rirs.reserve(array.size());
  std::size_t max_rir = 0;
  for (const Vec3& mic : array.mics) {
    rirs.push_back(compute_rir(room, setup.source_pos, setup.array_center + mic));
    max_rir = std::max(max_rir, rirs.back().size());
  }
  std::size_t fft_size = 2;
  while (fft_size < num_samples + max_rir - 1) fft_size <<= 1;
  const Fft& fft = Fft::plan(fft_size);

  std::vector<std::complex<double>> noise_fft(fft_size, {0.0, 0.0});
  for (std::size_t i = 0; i < num_samples; ++i) noise_fft[i] = noise[i];
  fft.forward(noise_fft);

  std::vector<std::vector<double>> channels(array.size());
  std::vector<std::complex<double>> buf(fft_size);
  for (std::size_t m = 0; m < array.size(); ++m) {
    std::fill(buf.begin(), buf.end(), std::complex<double>{0.0, 0.0});
    for (std::size_t i = 0; i < rirs[m].size(); ++i) buf[i] = rirs[m][i];
    fft.forward(buf);
    for (std::size_t i = 0; i < fft_size; ++i) buf[i] *= noise_fft[i];
    fft.inverse(buf);
    const double scale = 1.0 / static_cast<double>(fft_size);
    channels[m].resize(num_samples);
    for (std::size_t i = 0; i < num_samples; ++i) channels[m][i] = buf[i].real() * scale;
  }
  return channels;
}

}  // namespace smpphat
