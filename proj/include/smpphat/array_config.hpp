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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "smpphat/geometry.hpp"

namespace smpphat {

/// Parses {"name": str, "mics": [[x, y, z], ...]} with positions in meters.
inline MicArray parse_array_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("mics") || !doc["mics"].is_array()) {
    throw std::invalid_argument("array config must be an object with a \"mics\" array");
  }
  MicArray array;
  array.name = doc.value("name", "custom");
  for (const auto& entry : doc["mics"]) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument("each mic must be a 3-element [x, y, z] array");
    }
    for (const auto& coord : entry) {
      if (!coord.is_number()) throw std::invalid_argument("mic coordinates must be numbers");
    }
    array.mics.push_back(
        {entry[0].get<double>(), entry[1].get<double>(), entry[2].get<double>()});
  }
  validate_array(array);
  return array;
}

inline MicArray load_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open array config: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed array config " + path + ": " + e.what());
  }
  return parse_array_json(doc);
}

/// Resolves an array spec: a built-in preset name, a JSON file path, or a
/// name looked up in $SMPPHAT_ARRAY_DIR.
inline MicArray load_array(const std::string& spec) {
  if (is_array_preset(spec)) return array_preset(spec);
  if (std::filesystem::exists(spec)) return load_array_file(spec);
  if (const char* dir = std::getenv("SMPPHAT_ARRAY_DIR")) {
    const std::filesystem::path base(dir);
    for (const auto& candidate : {base / spec, base / (spec + ".json")}) {
      if (std::filesystem::exists(candidate)) return load_array_file(candidate.string());
    }
  }
  throw std::invalid_argument("unknown array \"" + spec +
                              "\": not a preset, file, or name under SMPPHAT_ARRAY_DIR");
}

}  // namespace smpphat
