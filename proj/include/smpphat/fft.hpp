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

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace smpphat {

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Iterative radix-2 complex FFT with precomputed bit-reversal and twiddle
/// tables. Both directions are unnormalized:
///   forward:  X[k] = sum_n x[n] exp(-i 2 pi n k / N)
///   inverse:  x[n] = sum_k X[k] exp(+i 2 pi n k / N)
class Fft {
 public:
  explicit Fft(std::size_t n) : n_(n) {
    if (!is_pow2(n) || n < 2) throw std::invalid_argument("fft size must be a power of two >= 2");
    bitrev_.resize(n);
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      bitrev_[i] = static_cast<std::uint32_t>(j);
    }
    // Stage twiddles packed back to back: stage with half-size h occupies
    // [h - 1, 2h - 1).
    tw_.resize(n - 1);
    for (std::size_t half = 1; half < n; half <<= 1) {
      for (std::size_t j = 0; j < half; ++j) {
        const double angle = -std::numbers::pi * static_cast<double>(j) / static_cast<double>(half);
        tw_[half - 1 + j] = std::polar(1.0, angle);
      }
    }
  }

  std::size_t size() const { return n_; }

  void forward(std::span<std::complex<double>> data) const { run(data, false); }
  void inverse(std::span<std::complex<double>> data) const { run(data, true); }

  /// Per-thread plan cache keyed on size, so pipeline code can transform
  /// without threading plan objects through every call.
  static const Fft& plan(std::size_t n) {
    thread_local std::map<std::size_t, Fft> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Fft(n)).first;
    return it->second;
  }

 private:
  void run(std::span<std::complex<double>> data, bool inv) const {
    if (data.size() != n_) throw std::invalid_argument("fft buffer size mismatch");
    auto* a = data.data();
    for (std::size_t i = 1; i < n_; ++i) {
      const std::size_t j = bitrev_[i];
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t half = 1; half < n_; half <<= 1) {
      const std::complex<double>* w = &tw_[half - 1];
      for (std::size_t base = 0; base < n_; base += half << 1) {
        for (std::size_t j = 0; j < half; ++j) {
          const std::complex<double> tw = inv ? std::conj(w[j]) : w[j];
          std::complex<double>& lo = a[base + j];
          std::complex<double>& hi = a[base + j + half];
          const std::complex<double> t = hi * tw;
          hi = lo - t;
          lo += t;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> bitrev_;
  std::vector<std::complex<double>> tw_;
};

/// Forward DFT of a real frame, returning the n/2+1 nonnegative-frequency bins.
inline std::vector<std::complex<double>> real_dft_bins(std::span<const double> x) {
  const std::size_t n = x.size();
  const Fft& fft = Fft::plan(n);
  std::vector<std::complex<double>> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
  fft.forward(buf);
  buf.resize(n / 2 + 1);
  return buf;
}

}  // namespace smpphat
