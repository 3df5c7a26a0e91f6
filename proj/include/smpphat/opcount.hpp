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

#include <cstdint>
#include <stdexcept>

namespace smpphat {

/// Inverse transforms, table lookups and real additions, either counted at
/// runtime by the localizers or predicted analytically by count_ops.
struct OpCounters {
  std::uint64_t iffts = 0;
  std::uint64_t lookups = 0;
  std::uint64_t additions = 0;

  bool operator==(const OpCounters&) const = default;
};

/// Predicted per-block costs of both scan methods plus the relative
/// reductions. For P pairs merged into Q groups over I directions with frame
/// size N:
///   direct scan:  P iffts, P*I lookups, P*I additions
///   merged scan:  Q iffts, Q*I lookups, Q*I + (N+2)(P-Q) additions
/// Deltas are reductions relative to the direct scan, as negative fractions.
struct OpCounts {
  OpCounters srp;
  OpCounters smp;
  double delta_iffts = 0.0;
  double delta_lookups = 0.0;
  double delta_additions = 0.0;
};

inline OpCounts count_ops(std::size_t pairs, std::size_t groups, std::size_t frame_size,
                          std::size_t dirs) {
  if (groups < 1 || groups > pairs) throw std::invalid_argument("need 1 <= groups <= pairs");
  if (frame_size < 2) throw std::invalid_argument("frame size must be at least 2");
  if (dirs < 1) throw std::invalid_argument("need at least one direction");
  OpCounts counts;
  counts.srp.iffts = pairs;
  counts.srp.lookups = pairs * dirs;
  counts.srp.additions = pairs * dirs;
  counts.smp.iffts = groups;
  counts.smp.lookups = groups * dirs;
  counts.smp.additions = groups * dirs + (frame_size + 2) * (pairs - groups);
  auto delta = [](std::uint64_t srp, std::uint64_t smp) {
    return -(static_cast<double>(srp) - static_cast<double>(smp)) / static_cast<double>(srp);
  };
  counts.delta_iffts = delta(counts.srp.iffts, counts.smp.iffts);
  counts.delta_lookups = delta(counts.srp.lookups, counts.smp.lookups);
  counts.delta_additions = delta(counts.srp.additions, counts.smp.additions);
  return counts;
}

}  // namespace smpphat
