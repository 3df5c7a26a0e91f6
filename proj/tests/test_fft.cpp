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

#include <catch2/catch.hpp>

#include <complex>
#include <numbers>
#include <vector>

#include "smpphat/fft.hpp"
#include "smpphat/rng.hpp"

namespace {

// O(n^2) reference transform, the oracle for the fast path.
std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x,
                                            bool inverse) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) {
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k * m) /
                           static_cast<double>(n);
      acc += x[m] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

std::vector<std::complex<double>> random_signal(std::size_t n, smpphat::Rng& rng) {
  std::vector<std::complex<double>> x(n);
  for (auto& v : x) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return x;
}

}  // namespace

TEST_CASE("fft matches the naive dft") {
  smpphat::Rng rng(7);
  for (std::size_t n : {2u, 4u, 8u, 32u, 128u, 1024u}) {
    const auto x = random_signal(n, rng);
    auto fast = x;
    smpphat::Fft::plan(n).forward(fast);
    const auto slow = naive_dft(x, false);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(std::abs(fast[i] - slow[i]) < 1e-9 * static_cast<double>(n));
    }
  }
}

TEST_CASE("inverse fft matches the naive inverse dft") {
  smpphat::Rng rng(8);
  const std::size_t n = 256;
  const auto x = random_signal(n, rng);
  auto fast = x;
  smpphat::Fft::plan(n).inverse(fast);
  const auto slow = naive_dft(x, true);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(std::abs(fast[i] - slow[i]) < 1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("forward then inverse recovers the signal times n") {
  smpphat::Rng rng(9);
  const std::size_t n = 512;
  const auto x = random_signal(n, rng);
  auto buf = x;
  const auto& fft = smpphat::Fft::plan(n);
  fft.forward(buf);
  fft.inverse(buf);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(std::abs(buf[i] / static_cast<double>(n) - x[i]) < 1e-12);
  }
}

TEST_CASE("real input produces a conjugate-symmetric spectrum") {
  smpphat::Rng rng(10);
  const std::size_t n = 64;
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  std::vector<std::complex<double>> buf(n);
  for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
  smpphat::Fft::plan(n).forward(buf);
  for (std::size_t f = 1; f < n / 2; ++f) {
    REQUIRE(std::abs(buf[f] - std::conj(buf[n - f])) < 1e-12);
  }
  REQUIRE(std::abs(buf[0].imag()) < 1e-12);
  REQUIRE(std::abs(buf[n / 2].imag()) < 1e-12);
}

TEST_CASE("invalid sizes are rejected") {
  REQUIRE_THROWS_AS(smpphat::Fft(0), std::invalid_argument);
  REQUIRE_THROWS_AS(smpphat::Fft(1), std::invalid_argument);
  REQUIRE_THROWS_AS(smpphat::Fft(12), std::invalid_argument);
}

TEST_CASE("real_dft_bins keeps the nonnegative half") {
  std::vector<double> x(8, 1.0);
  const auto bins = smpphat::real_dft_bins(x);
  REQUIRE(bins.size() == 5);
  REQUIRE(bins[0].real() == Approx(8.0));
  for (std::size_t f = 1; f < bins.size(); ++f) REQUIRE(std::abs(bins[f]) < 1e-12);
}
