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
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "smpphat/gcc.hpp"
#include "smpphat/grid.hpp"
#include "smpphat/merge.hpp"
#include "smpphat/opcount.hpp"
#include "smpphat/tdoa.hpp"

namespace smpphat {

/// Per-group spectra after frequency-domain merging: members with negative
/// sign enter conjugated, which is time reversal of their correlation.
struct MergedSpectra {
  std::size_t num_groups = 0;
  std::size_t frame_size = 0;
  std::vector<std::complex<double>> values;  // num_groups x (N/2+1)

  std::size_t bins() const { return frame_size / 2 + 1; }

  std::span<const std::complex<double>> group(std::size_t q) const {
    return {values.data() + q * bins(), bins()};
  }
};

inline MergedSpectra merge_spectra(const PhatSpectra& spectra, const MergePlan& plan,
                                   OpCounters* counters = nullptr) {
  if (plan.num_pairs != spectra.num_pairs) {
    throw std::invalid_argument("plan and spectra have different pair counts");
  }
  MergedSpectra merged;
  merged.num_groups = plan.groups.size();
  merged.frame_size = spectra.frame_size;
  const std::size_t bins = merged.bins();
  merged.values.assign(merged.num_groups * bins, {0.0, 0.0});
  for (std::size_t q = 0; q < plan.groups.size(); ++q) {
    std::complex<double>* out = merged.values.data() + q * bins;
    for (const GroupMember& member : plan.groups[q].members) {
      const auto row = spectra.pair(static_cast<std::size_t>(member.pair));
      if (member.sign > 0) {
        for (std::size_t f = 0; f < bins; ++f) out[f] += row[f];
      } else {
        for (std::size_t f = 0; f < bins; ++f) out[f] += std::conj(row[f]);
      }
    }
    if (counters) {
      // summing n unit-magnitude bins takes n-1 complex adds per bin,
      // i.e. N+2 real additions per extra member
      counters->additions += (plan.groups[q].members.size() - 1) * (spectra.frame_size + 2);
    }
  }
  return merged;
}

/// Winning direction of one steered-power scan.
struct LocalizationResult {
  Vec3 direction;
  std::size_t grid_index = 0;
  double energy = 0.0;
  std::size_t block_start_frame = 0;  // filled by streaming callers
  std::size_t block_frames = 0;
};

namespace detail {

// Scans E(i) = sum_r corr[r][delays(row_of_r, i)] over all directions and
// returns the first index attaining the maximum (strict > while scanning i
// ascending). E_max starts at -infinity so an all-negative field still
// returns a valid index.
inline LocalizationResult scan_energy(const std::vector<CorrelationVector>& corr,
                                      std::span<const std::size_t> table_rows,
                                      const TdoaTable& table, const DoaGrid& grid,
                                      OpCounters* counters, std::vector<double>* energies) {
  const auto wrap = static_cast<std::int64_t>(corr.front().samples.size());
  if (energies) energies->resize(table.num_dirs);
  LocalizationResult best;
  best.grid_index = 0;
  best.energy = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < table.num_dirs; ++i) {
    double energy = 0.0;
    for (std::size_t r = 0; r < corr.size(); ++r) {
      std::int64_t lag = table.at(table_rows[r], i);
      if (lag < 0) lag += wrap;
      energy += corr[r].samples[static_cast<std::size_t>(lag)];
    }
    if (energies) (*energies)[i] = energy;
    if (energy > best.energy) {
      best.energy = energy;
      best.grid_index = i;
    }
  }
  if (counters) {
    counters->lookups += corr.size() * table.num_dirs;
    counters->additions += corr.size() * table.num_dirs;
  }
  best.direction = grid.dirs[best.grid_index];
  return best;
}

}  // namespace detail

/// Direct steered-power scan: one inverse transform per pair, then
/// E(i) = sum_p r_p[k tau_p[i]] over all candidate directions.
inline LocalizationResult srp_phat(const PhatSpectra& spectra, const TdoaTable& table,
                                   const DoaGrid& grid, OpCounters* counters = nullptr,
                                   std::vector<double>* energies = nullptr) {
  if (spectra.num_pairs != table.num_pairs) {
    throw std::invalid_argument("spectra and table have different pair counts");
  }
  if (table.num_dirs != grid.size()) {
    throw std::invalid_argument("table and grid have different direction counts");
  }
  if (table.num_pairs == 0 || table.num_dirs == 0) throw std::invalid_argument("empty scan");

  std::vector<CorrelationVector> corr;
  corr.reserve(spectra.num_pairs);
  std::vector<std::size_t> rows(spectra.num_pairs);
  for (std::size_t p = 0; p < spectra.num_pairs; ++p) {
    corr.push_back(gcc(spectra.pair(p), table.k));
    rows[p] = p;
    if (counters) ++counters->iffts;
  }
  return detail::scan_energy(corr, rows, table, grid, counters, energies);
}

/// Merged scan: merges pair spectra per group, runs one inverse transform per
/// group, and scans with each group's reference-pair delays. Produces the
/// same energy field as srp_phat up to floating-point roundoff because time
/// reversal in the lookup is exactly compensated by conjugation.
inline LocalizationResult smp_phat(const PhatSpectra& spectra, const MergePlan& plan,
                                   const TdoaTable& table, const DoaGrid& grid,
                                   OpCounters* counters = nullptr,
                                   std::vector<double>* energies = nullptr) {
  if (spectra.num_pairs != table.num_pairs) {
    throw std::invalid_argument("spectra and table have different pair counts");
  }
  if (table.num_dirs != grid.size()) {
    throw std::invalid_argument("table and grid have different direction counts");
  }
  const MergedSpectra merged = merge_spectra(spectra, plan, counters);
  if (merged.num_groups == 0 || table.num_dirs == 0) throw std::invalid_argument("empty scan");

  std::vector<CorrelationVector> corr;
  corr.reserve(merged.num_groups);
  std::vector<std::size_t> rows(merged.num_groups);
  for (std::size_t q = 0; q < merged.num_groups; ++q) {
    corr.push_back(gcc(merged.group(q), table.k));
    rows[q] = static_cast<std::size_t>(plan.groups[q].ref);
    if (counters) ++counters->iffts;
  }
  return detail::scan_energy(corr, rows, table, grid, counters, energies);
}

}  // namespace smpphat
