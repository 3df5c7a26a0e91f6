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
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "smpphat/vec3.hpp"

namespace smpphat {

/// Candidate directions of arrival: unit vectors from a subdivided
/// icosahedron, optionally restricted to the upper hemisphere (z >= -1e-6,
/// equator kept). Level 4 gives 2562 vertices on the full sphere and 1321 on
/// the hemisphere, roughly uniform coverage.
struct DoaGrid {
  std::vector<Vec3> dirs;
  int level = 0;
  bool hemisphere = false;

  std::size_t size() const { return dirs.size(); }
};

namespace detail {

// Base icosahedron with vertices at the poles: poles first, then the upper
// ring at z = +1/sqrt(5) and the lower ring at z = -1/sqrt(5). The lower-ring
// z is the exact negation of the upper-ring z, so midpoints of edges crossing
// the equator land on z = 0 exactly.
inline void icosahedron(std::vector<Vec3>& verts, std::vector<std::array<std::uint32_t, 3>>& faces) {
  const double h = 1.0 / std::sqrt(5.0);
  const double r = 2.0 / std::sqrt(5.0);
  verts.clear();
  verts.push_back({0.0, 0.0, 1.0});
  verts.push_back({0.0, 0.0, -1.0});
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 5.0;
    verts.push_back({r * std::cos(a), r * std::sin(a), h});
  }
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 5.0 + std::numbers::pi / 5.0;
    verts.push_back({r * std::cos(a), r * std::sin(a), -h});
  }
  faces.clear();
  for (std::uint32_t i = 0; i < 5; ++i) {
    const std::uint32_t top = 2 + i;
    const std::uint32_t top_next = 2 + (i + 1) % 5;
    const std::uint32_t bot = 7 + i;
    const std::uint32_t bot_next = 7 + (i + 1) % 5;
    faces.push_back({0, top, top_next});
    faces.push_back({top, bot, top_next});
    faces.push_back({bot, bot_next, top_next});
    faces.push_back({1, bot_next, bot});
  }
}

}  // namespace detail

/// Recursive 4-way triangle subdivision with midpoint projection onto the
/// unit sphere. Shared edge midpoints are created once, so vertices are
/// already unique; subdivision_level must be in 0..6.
inline DoaGrid build_doa_grid(int subdivision_level, bool hemisphere) {
  if (subdivision_level < 0 || subdivision_level > 6) {
    throw std::invalid_argument("grid subdivision level must be in 0..6");
  }
  std::vector<Vec3> verts;
  std::vector<std::array<std::uint32_t, 3>> faces;
  detail::icosahedron(verts, faces);

  for (int level = 0; level < subdivision_level; ++level) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    auto mid = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Vec3 m = ((verts[a] + verts[b]) * 0.5).normalized();
      verts.push_back(m);
      const auto idx = static_cast<std::uint32_t>(verts.size() - 1);
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<std::uint32_t, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const std::uint32_t ab = mid(f[0], f[1]);
      const std::uint32_t bc = mid(f[1], f[2]);
      const std::uint32_t ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  DoaGrid grid;
  grid.level = subdivision_level;
  grid.hemisphere = hemisphere;
  if (hemisphere) {
    for (const auto& v : verts) {
      if (v.z >= -1e-6) grid.dirs.push_back(v);
    }
  } else {
    grid.dirs = std::move(verts);
  }
  return grid;
}

}  // namespace smpphat
