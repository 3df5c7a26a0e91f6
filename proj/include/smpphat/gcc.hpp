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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "smpphat/fft.hpp"
#include "smpphat/geometry.hpp"
#include "smpphat/stft.hpp"

namespace smpphat {

/// Per-pair cross-spectra accumulated over a block of frames:
///   C_p[f] = sum_t conj(X_u[t,f]) X_v[t,f]
/// The conjugate sits on the first microphone of the pair so that a source
/// closer to mic u (wavefront arriving at u first) yields a correlation peak
/// at positive lag, matching the sign of the precomputed lookup delays.
struct CrossSpectra {
  std::size_t num_pairs = 0;
  std::size_t frame_size = 0;
  std::size_t frames_accumulated = 0;
  std::vector<std::complex<double>> values;  // num_pairs x (N/2+1)

  std::span<const std::complex<double>> pair(std::size_t p) const {
    const std::size_t stride = frame_size / 2 + 1;
    return {values.data() + p * stride, stride};
  }
};

/// Accumulates the first `block` frames of the stream. Throws if the stream
/// ends before the block completes.
inline CrossSpectra cross_spectrum(std::span<const SpectralFrame> frames, const PairSet& pairs,
                                   std::size_t block) {
  if (block < 1) throw std::invalid_argument("block must contain at least one frame");
  if (frames.size() < block) throw std::invalid_argument("stream ended before block completed");

  CrossSpectra cross;
  cross.num_pairs = pairs.size();
  cross.frame_size = frames[0].frame_size;
  cross.frames_accumulated = block;
  const std::size_t bins = cross.frame_size / 2 + 1;
  cross.values.assign(cross.num_pairs * bins, {0.0, 0.0});

  for (std::size_t t = 0; t < block; ++t) {
    const SpectralFrame& frame = frames[t];
    if (frame.frame_size != cross.frame_size) {
      throw std::invalid_argument("inconsistent frame size in stream");
    }
    for (std::size_t p = 0; p < cross.num_pairs; ++p) {
      const auto xu = frame.mic(static_cast<std::size_t>(pairs.pairs[p].u));
      const auto xv = frame.mic(static_cast<std::size_t>(pairs.pairs[p].v));
      std::complex<double>* out = cross.values.data() + p * bins;
      for (std::size_t f = 0; f < bins; ++f) out[f] += std::conj(xu[f]) * xv[f];
    }
  }
  return cross;
}

/// Phase-transformed cross-spectra: every bin normalized to unit magnitude,
/// bins at or below the energy floor forced to zero instead of NaN.
struct PhatSpectra {
  std::size_t num_pairs = 0;
  std::size_t frame_size = 0;
  std::vector<std::complex<double>> values;  // num_pairs x (N/2+1)

  std::size_t bins() const { return frame_size / 2 + 1; }

  std::span<const std::complex<double>> pair(std::size_t p) const {
    return {values.data() + p * bins(), bins()};
  }
};

inline PhatSpectra phat(const CrossSpectra& cross, double floor = 1e-12) {
  if (floor < 0.0) throw std::invalid_argument("phat floor must be nonnegative");
  PhatSpectra out;
  out.num_pairs = cross.num_pairs;
  out.frame_size = cross.frame_size;
  out.values.resize(cross.values.size());
  for (std::size_t i = 0; i < cross.values.size(); ++i) {
    const double mag = std::abs(cross.values[i]);
    out.values[i] = mag > floor ? cross.values[i] / mag : std::complex<double>{0.0, 0.0};
  }
  return out;
}

/// Time-domain correlation on the interpolated lag grid. samples[m] holds the
/// correlation at lag m/k samples; lookups index circularly, so negative lags
/// wrap to the top of the buffer.
struct CorrelationVector {
  int k = 1;
  std::size_t frame_size = 0;
  std::vector<double> samples;  // k*N

  double at_delay(std::int64_t interpolated_lag) const {
    const auto n = static_cast<std::int64_t>(samples.size());
    std::int64_t idx = interpolated_lag % n;
    if (idx < 0) idx += n;
    return samples[static_cast<std::size_t>(idx)];
  }
};

/// Interpolated inverse transform of one phase-transformed row: the N/2+1
/// bins are zero-padded to length kN and inverse-transformed, and the result
/// is the real part of the half-spectrum sum
///   r[m] = Re sum_{f=0}^{N/2} R[f] exp(+i 2 pi f m / (k N)),
/// every bin counted once. No further scaling is applied.
inline CorrelationVector gcc(std::span<const std::complex<double>> spectrum_row, int k) {
  if (k != 1 && k != 2 && k != 4 && k != 8) throw std::invalid_argument("k must be 1, 2, 4 or 8");
  if (spectrum_row.size() < 2) throw std::invalid_argument("spectrum row too short");
  const std::size_t frame_size = 2 * (spectrum_row.size() - 1);
  if (!is_pow2(frame_size)) throw std::invalid_argument("spectrum row length must be N/2+1");
  const std::size_t padded = static_cast<std::size_t>(k) * frame_size;

  const Fft& fft = Fft::plan(padded);
  std::vector<std::complex<double>> buf(padded, {0.0, 0.0});
  for (std::size_t f = 0; f < spectrum_row.size(); ++f) buf[f] = spectrum_row[f];
  fft.inverse(buf);

  CorrelationVector corr;
  corr.k = k;
  corr.frame_size = frame_size;
  corr.samples.resize(padded);
  for (std::size_t m = 0; m < padded; ++m) corr.samples[m] = buf[m].real();
  return corr;
}

}  // namespace smpphat
