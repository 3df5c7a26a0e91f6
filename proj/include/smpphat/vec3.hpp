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
#include <numbers>

namespace smpphat {

/// Cartesian 3-vector in meters (positions) or unit length (directions).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

  double norm() const { return std::sqrt(dot(*this)); }

  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Angle between two unit vectors, in degrees. Clamps the dot product so
/// floating-point drift just past +/-1 does not produce NaN.
inline double angle_deg(const Vec3& a, const Vec3& b) {
  double c = a.dot(b);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c) * 180.0 / std::numbers::pi;
}

inline double azimuth_deg(const Vec3& u) { return std::atan2(u.y, u.x) * 180.0 / std::numbers::pi; }

inline double elevation_deg(const Vec3& u) {
  double z = u.z;
  if (z > 1.0) z = 1.0;
  if (z < -1.0) z = -1.0;
  return std::asin(z) * 180.0 / std::numbers::pi;
}

}  // namespace smpphat
