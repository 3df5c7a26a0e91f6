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

#include <cstdio>
#include <fstream>

#include "smpphat/array_config.hpp"
#include "smpphat/geometry.hpp"

using smpphat::MicArray;
using smpphat::Vec3;

TEST_CASE("presets have the vendor sizes and positions") {
  const MicArray usb = smpphat::array_preset("respeaker-usb");
  REQUIRE(usb.size() == 4);
  REQUIRE(usb.mics[0].x == Approx(-0.0320));
  REQUIRE(usb.mics[0].y == 0.0);
  REQUIRE(usb.mics[0].z == 0.0);

  REQUIRE(smpphat::array_preset("respeaker-core").size() == 6);
  REQUIRE(smpphat::array_preset("minidsp-uma").size() == 7);

  const MicArray mc = smpphat::array_preset("matrix-creator");
  REQUIRE(mc.size() == 8);
  REQUIRE(mc.mics[7].x == Approx(0.0485));
  REQUIRE(mc.mics[7].y == Approx(-0.0201));
}

TEST_CASE("unknown preset is rejected") {
  REQUIRE_THROWS_AS(smpphat::array_preset("respeaker-usb-2"), std::invalid_argument);
  REQUIRE_FALSE(smpphat::is_array_preset("nope"));
  REQUIRE(smpphat::is_array_preset("matrix-creator"));
}

TEST_CASE("array validation") {
  REQUIRE_THROWS_AS(smpphat::make_array("one", {{0, 0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(smpphat::make_array("dup", {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}),
                    std::invalid_argument);
  // 1e-6 m apart is still coincident under the tolerance
  REQUIRE_THROWS_AS(smpphat::make_array("close", {{0, 0, 0}, {1e-7, 0, 0}}),
                    std::invalid_argument);
  REQUIRE_NOTHROW(smpphat::make_array("ok", {{0, 0, 0}, {0.05, 0, 0}}));
}

TEST_CASE("pair enumeration is lexicographic with d = x_u - x_v") {
  const MicArray usb = smpphat::array_preset("respeaker-usb");
  const smpphat::PairSet pairs = smpphat::enumerate_pairs(usb);
  REQUIRE(pairs.size() == 6);
  REQUIRE(pairs.pairs[0].u == 0);
  REQUIRE(pairs.pairs[0].v == 1);

  // pair (mic 0, mic 2): d is the difference of the two opposite x mics
  REQUIRE(pairs.pairs[1].u == 0);
  REQUIRE(pairs.pairs[1].v == 2);
  REQUIRE(pairs.pairs[1].d.x == Approx(-0.064));
  REQUIRE(pairs.pairs[1].d.y == 0.0);
  REQUIRE(pairs.pairs[1].d.z == 0.0);

  const MicArray two = smpphat::make_array("two", {{0, 0, 0}, {0.1, 0, 0}});
  REQUIRE(smpphat::enumerate_pairs(two).size() == 1);
}

TEST_CASE("pair count and difference vectors for every preset") {
  for (const auto& name : smpphat::array_preset_names()) {
    const MicArray array = smpphat::array_preset(name);
    const smpphat::PairSet pairs = smpphat::enumerate_pairs(array);
    const std::size_t m = array.size();
    REQUIRE(pairs.size() == m * (m - 1) / 2);
    std::size_t p = 0;
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v, ++p) {
        REQUIRE(pairs.pairs[p].u == static_cast<int>(u));
        REQUIRE(pairs.pairs[p].v == static_cast<int>(v));
        const Vec3 expected = array.mics[u] - array.mics[v];
        REQUIRE(pairs.pairs[p].d.x == expected.x);
        REQUIRE(pairs.pairs[p].d.y == expected.y);
        REQUIRE(pairs.pairs[p].d.z == expected.z);
      }
    }
  }
}

TEST_CASE("json array configs load and validate") {
  const auto doc = nlohmann::json::parse(R"({"name":"tri","mics":[[0,0,0],[0.1,0,0],[0,0.1,0]]})");
  const MicArray array = smpphat::parse_array_json(doc);
  REQUIRE(array.name == "tri");
  REQUIRE(array.size() == 3);

  REQUIRE_THROWS_AS(smpphat::parse_array_json(nlohmann::json::parse(R"({"mics":[[0,0,0]]})")),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(smpphat::parse_array_json(nlohmann::json::parse(R"({"mics":[[0,0],[1,1]]})")),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(smpphat::parse_array_json(nlohmann::json::parse(R"({"no_mics":1})")),
                    std::invalid_argument);
}

TEST_CASE("load_array resolves presets, files, and rejects the rest") {
  REQUIRE(smpphat::load_array("respeaker-core").size() == 6);

  const std::string path = "test_array_config.json";
  {
    std::ofstream out(path);
    out << R"({"name":"file-array","mics":[[0,0,0],[0.2,0,0]]})";
  }
  const MicArray from_file = smpphat::load_array(path);
  REQUIRE(from_file.name == "file-array");
  REQUIRE(from_file.size() == 2);
  std::remove(path.c_str());

  REQUIRE_THROWS_AS(smpphat::load_array("no-such-array"), std::invalid_argument);
}
