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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/utsname.h>

#include "smpphat/campaign.hpp"
#include "smpphat/gcc.hpp"
#include "smpphat/geometry.hpp"
#include "smpphat/localizer.hpp"
#include "smpphat/opcount.hpp"
#include "smpphat/rng.hpp"

namespace smpphat {

struct BenchConfig {
  std::size_t frame_size = 512;
  int grid_level = 4;
  int k = 4;
  double fs = 16000.0;
  double c = 343.0;
  double epsilon = 1e-4;
  std::size_t repetitions = 100;  // timed iterations, at least 30 for a stable report
  std::size_t warmup = 10;        // untimed iterations before measuring
  std::uint64_t seed = 1;
};

struct MethodTiming {
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
  OpCounters ops;  // counted on one instrumented, untimed run
};

struct BenchReport {
  std::string array;
  std::string machine;
  std::size_t mics = 0;
  std::size_t pairs = 0;
  std::size_t groups = 0;
  std::size_t dirs = 0;
  std::size_t frame_size = 0;
  int k = 0;
  std::size_t repetitions = 0;
  std::size_t warmup = 0;
  MethodTiming srp;
  MethodTiming smp;
};

namespace detail {

inline std::string machine_label() {
  utsname info{};
  if (uname(&info) != 0) return "unknown";
  return std::string(info.sysname) + " " + info.release + " " + info.machine;
}

// Unit-magnitude spectra with random phases; DC and Nyquist bins are real, as
// the phase transform of a real signal would produce. Localization cost does
// not depend on the values, only the layout, so synthetic spectra time the
// same as audio-derived ones.
inline PhatSpectra random_phat_spectra(std::size_t num_pairs, std::size_t frame_size, Rng& rng) {
  PhatSpectra spectra;
  spectra.num_pairs = num_pairs;
  spectra.frame_size = frame_size;
  const std::size_t bins = frame_size / 2 + 1;
  spectra.values.resize(num_pairs * bins);
  for (std::size_t p = 0; p < num_pairs; ++p) {
    std::complex<double>* row = spectra.values.data() + p * bins;
    row[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    row[bins - 1] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    for (std::size_t f = 1; f + 1 < bins; ++f) {
      row[f] = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
  }
  return spectra;
}

}  // namespace detail

/// Times end-to-end block localization (merge + inverse transforms + scan)
/// for both methods on one synthesized spectra payload, single threaded.
/// Reports mean and standard deviation over `repetitions` runs after
/// `warmup` discarded runs, plus instrumented op counters for cross-checking
/// against count_ops.
inline BenchReport run_bench(const MicArray& array, const BenchConfig& config) {
  if (config.repetitions < 1) throw std::invalid_argument("benchmark needs at least 1 repetition");

  const PairSet pairs = enumerate_pairs(array);
  const DoaGrid grid = build_doa_grid(config.grid_level, true);
  const TdoaTable table = build_tdoa_table(pairs, grid, config.fs, config.c, config.k);
  const MergePlan plan = build_merge_plan(pairs, config.epsilon);

  Rng rng(config.seed);
  const PhatSpectra spectra = detail::random_phat_spectra(pairs.size(), config.frame_size, rng);

  BenchReport report;
  report.array = array.name;
  report.machine = detail::machine_label();
  report.mics = array.size();
  report.pairs = pairs.size();
  report.groups = plan.groups.size();
  report.dirs = grid.size();
  report.frame_size = config.frame_size;
  report.k = config.k;
  report.repetitions = config.repetitions;
  report.warmup = config.warmup;

  auto time_method = [&](Method method) {
    MethodTiming timing;
    volatile double sink = 0.0;  // keep the scan from being optimized out
    auto run_once = [&](OpCounters* counters) {
      const LocalizationResult result =
          method == Method::srp ? srp_phat(spectra, table, grid, counters)
                                : smp_phat(spectra, plan, table, grid, counters);
      sink = result.energy;
    };
    OpCounters counters;
    run_once(&counters);
    timing.ops = counters;
    for (std::size_t i = 0; i < config.warmup; ++i) run_once(nullptr);
    std::vector<double> times_ms(config.repetitions);
    for (std::size_t i = 0; i < config.repetitions; ++i) {
      const auto begin = std::chrono::steady_clock::now();
      run_once(nullptr);
      const auto end = std::chrono::steady_clock::now();
      times_ms[i] = std::chrono::duration<double, std::milli>(end - begin).count();
    }
    double sum = 0.0;
    for (double t : times_ms) sum += t;
    timing.mean_ms = sum / static_cast<double>(times_ms.size());
    double var = 0.0;
    for (double t : times_ms) var += (t - timing.mean_ms) * (t - timing.mean_ms);
    timing.stddev_ms = std::sqrt(var / static_cast<double>(times_ms.size()));
    (void)sink;
    return timing;
  };

  report.srp = time_method(Method::srp);
  report.smp = time_method(Method::smp);
  return report;
}

}  // namespace smpphat
