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

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smpphat/geometry.hpp"
#include "smpphat/tdoa.hpp"

namespace smpphat {

struct GroupMember {
  int pair = 0;  // zero-based pair index
  int sign = 1;  // +1 if d_pair points along the reference, -1 if opposite
};

/// One set of parallel, equidistant pairs. The reference is the lowest pair
/// index in the set and always carries sign +1.
struct MergeGroup {
  int ref = 0;
  std::vector<GroupMember> members;
};

/// Partition of all pairs into merge groups, ordered by reference index.
/// Pairs whose lookup delays coincide (up to sign) for every candidate
/// direction share a group, so one correlation per group suffices.
struct MergePlan {
  std::vector<MergeGroup> groups;
  double epsilon = 1e-4;
  std::size_t num_pairs = 0;
};

/// Greedy sweep in ascending pair index: the lowest unassigned pair seeds a
/// group and every later unassigned pair that is parallel (|d_p . d_ref|
/// within epsilon of ||d_p|| ||d_ref||) and of equal length (within epsilon)
/// joins it. epsilon is absolute, in m^2 for the parallelism test and m for
/// the length test; the default 1e-4 separates exact merges from near misses
/// by orders of magnitude at centimeter apertures.
inline MergePlan build_merge_plan(const PairSet& pairs, double epsilon = 1e-4) {
  if (epsilon <= 0.0) throw std::invalid_argument("merge epsilon must be positive");
  const std::size_t count = pairs.size();
  std::vector<double> norms(count);
  for (std::size_t p = 0; p < count; ++p) {
    norms[p] = pairs.pairs[p].d.norm();
    if (norms[p] <= 0.0) throw std::invalid_argument("zero-length pair difference vector");
  }

  MergePlan plan;
  plan.epsilon = epsilon;
  plan.num_pairs = count;
  std::vector<bool> assigned(count, false);
  for (std::size_t seed = 0; seed < count; ++seed) {
    if (assigned[seed]) continue;
    assigned[seed] = true;
    MergeGroup group;
    group.ref = static_cast<int>(seed);
    group.members.push_back({static_cast<int>(seed), +1});
    const Vec3& d_ref = pairs.pairs[seed].d;
    for (std::size_t cand = seed + 1; cand < count; ++cand) {
      if (assigned[cand]) continue;
      const Vec3& d = pairs.pairs[cand].d;
      const double dot = d.dot(d_ref);
      const bool parallel = std::abs(std::abs(dot) - norms[cand] * norms[seed]) < epsilon;
      const bool equal_length = std::abs(norms[cand] - norms[seed]) < epsilon;
      if (parallel && equal_length) {
        assert(dot != 0.0);  // parallel vectors cannot be orthogonal
        assigned[cand] = true;
        group.members.push_back({static_cast<int>(cand), dot > 0.0 ? +1 : -1});
      }
    }
    plan.groups.push_back(std::move(group));
  }
  return plan;
}

/// Outcome of checking a plan against a delay table. On failure, (pair, dir)
/// locate the first violation in scan order along with both delay values.
struct PlanValidation {
  bool ok = true;
  std::size_t checks = 0;
  int group = -1;
  int pair = -1;
  std::size_t dir = 0;
  std::int32_t expected = 0;
  std::int32_t actual = 0;
};

/// Exhaustively verifies the merged-delay identity
///   delays[p][i] == sign * delays[ref][i]
/// for every grouped pair and every direction. Equality is exact: rounding
/// half away from zero commutes with the sign flip.
inline PlanValidation validate_plan(const MergePlan& plan, const TdoaTable& table) {
  if (plan.num_pairs != table.num_pairs) {
    throw std::invalid_argument("plan and table were built from different pair sets");
  }
  PlanValidation result;
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    const MergeGroup& group = plan.groups[g];
    for (const GroupMember& member : group.members) {
      for (std::size_t i = 0; i < table.num_dirs; ++i) {
        const std::int32_t expected = member.sign * table.at(group.ref, i);
        const std::int32_t actual = table.at(member.pair, i);
        ++result.checks;
        if (expected != actual) {
          result.ok = false;
          result.group = static_cast<int>(g);
          result.pair = member.pair;
          result.dir = i;
          result.expected = expected;
          result.actual = actual;
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace smpphat
