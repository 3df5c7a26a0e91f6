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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smpphat/vec3.hpp"

namespace smpphat {

/// Microphone positions in meters, in capture-channel order.
struct MicArray {
  std::string name;
  std::vector<Vec3> mics;

  std::size_t size() const { return mics.size(); }
};

/// Two or more microphones, no coincident positions.
inline void validate_array(const MicArray& array) {
  if (array.mics.size() < 2) throw std::invalid_argument("array needs at least 2 microphones");
  for (std::size_t i = 0; i < array.mics.size(); ++i) {
    for (std::size_t j = i + 1; j < array.mics.size(); ++j) {
      if (distance(array.mics[i], array.mics[j]) <= 1e-6) {
        throw std::invalid_argument("coincident microphones at indices " + std::to_string(i) +
                                    " and " + std::to_string(j));
      }
    }
  }
}

inline MicArray make_array(std::string name, std::vector<Vec3> mics) {
  MicArray array{std::move(name), std::move(mics)};
  validate_array(array);
  return array;
}

inline const std::vector<std::string>& array_preset_names() {
  static const std::vector<std::string> names = {"respeaker-usb", "respeaker-core", "minidsp-uma",
                                                 "matrix-creator"};
  return names;
}

inline bool is_array_preset(std::string_view name) {
  for (const auto& preset : array_preset_names()) {
    if (preset == name) return true;
  }
  return false;
}

/// Built-in geometries of four commercial arrays.
inline MicArray array_preset(std::string_view name) {
  if (name == "respeaker-usb") {
    return make_array("respeaker-usb", {{-0.0320, 0.0000, 0.0000},
                                        {0.0000, -0.0320, 0.0000},
                                        {0.0320, 0.0000, 0.0000},
                                        {0.0000, 0.0320, 0.0000}});
  }
  if (name == "respeaker-core") {
    return make_array("respeaker-core", {{-0.0232, 0.0401, 0.0000},
                                         {-0.0463, 0.0000, 0.0000},
                                         {-0.0232, -0.0401, 0.0000},
                                         {0.0232, -0.0401, 0.0000},
                                         {0.0463, 0.0000, 0.0000},
                                         {0.0232, 0.0401, 0.0000}});
  }
  if (name == "minidsp-uma") {
    return make_array("minidsp-uma", {{0.0000, 0.0000, 0.0000},
                                      {0.0000, 0.0430, 0.0000},
                                      {0.0370, 0.0210, 0.0000},
                                      {0.0370, -0.0210, 0.0000},
                                      {0.0000, -0.0430, 0.0000},
                                      {-0.0370, -0.0210, 0.0000},
                                      {-0.0370, 0.0210, 0.0000}});
  }
  if (name == "matrix-creator") {
    return make_array("matrix-creator", {{0.0201, -0.0485, 0.0000},
                                         {-0.0201, -0.0485, 0.0000},
                                         {-0.0485, -0.0201, 0.0000},
                                         {-0.0485, 0.0201, 0.0000},
                                         {-0.0201, 0.0485, 0.0000},
                                         {0.0201, 0.0485, 0.0000},
                                         {0.0485, 0.0201, 0.0000},
                                         {0.0485, -0.0201, 0.0000}});
  }
  throw std::invalid_argument("unknown array preset: " + std::string(name));
}

/// One microphone pair (u, v) with u < v and difference vector d = x_u - x_v.
struct MicPair {
  int u = 0;
  int v = 0;
  Vec3 d;
};

/// All M(M-1)/2 pairs in lexicographic (u, v) order. Pair indices are zero
/// based everywhere in this library; exported plans are one based.
struct PairSet {
  std::vector<MicPair> pairs;

  std::size_t size() const { return pairs.size(); }
};

inline PairSet enumerate_pairs(const MicArray& array) {
  validate_array(array);
  PairSet set;
  const int m = static_cast<int>(array.mics.size());
  set.pairs.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      set.pairs.push_back({u, v, array.mics[u] - array.mics[v]});
    }
  }
  return set;
}

}  // namespace smpphat
