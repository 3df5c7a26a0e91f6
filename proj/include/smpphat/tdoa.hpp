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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smpphat/geometry.hpp"
#include "smpphat/grid.hpp"

namespace smpphat {

/// Rounds to nearest, halves away from zero, so that negating the input
/// negates the output exactly.
inline std::int32_t round_half_away(double x) { return static_cast<std::int32_t>(std::llround(x)); }

/// Precomputed integer lookup delays: delays[p][i] = round(k (fs/c) d_p . u_i),
/// i.e. the interpolated-sample TDoA of pair p for candidate direction u_i.
struct TdoaTable {
  std::size_t num_pairs = 0;
  std::size_t num_dirs = 0;
  int k = 1;
  double fs = 0.0;
  double c = 0.0;
  std::vector<std::int32_t> delays;  // row-major, one row per pair

  std::int32_t at(std::size_t pair, std::size_t dir) const { return delays[pair * num_dirs + dir]; }
};

inline TdoaTable build_tdoa_table(const PairSet& pairs, const DoaGrid& grid, double fs, double c,
                                  int k) {
  if (fs <= 0.0) throw std::invalid_argument("sample rate must be positive");
  if (c <= 0.0) throw std::invalid_argument("speed of sound must be positive");
  if (k != 1 && k != 2 && k != 4 && k != 8) throw std::invalid_argument("k must be 1, 2, 4 or 8");
  TdoaTable table;
  table.num_pairs = pairs.size();
  table.num_dirs = grid.size();
  table.k = k;
  table.fs = fs;
  table.c = c;
  table.delays.resize(table.num_pairs * table.num_dirs);
  const double scale = static_cast<double>(k) * fs / c;
  std::size_t out = 0;
  for (const auto& pair : pairs.pairs) {
    for (const auto& dir : grid.dirs) {
      table.delays[out++] = round_half_away(scale * pair.d.dot(dir));
    }
  }
  return table;
}

}  // namespace smpphat
