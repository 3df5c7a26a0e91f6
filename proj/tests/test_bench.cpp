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

#include "smpphat/bench.hpp"
#include "smpphat/opcount.hpp"

using namespace smpphat;

TEST_CASE("bench rejects zero repetitions") {
  BenchConfig config;
  config.repetitions = 0;
  REQUIRE_THROWS_AS(run_bench(array_preset("respeaker-usb"), config), std::invalid_argument);
}

TEST_CASE("bench echoes its configuration and cross-checks the counters") {
  BenchConfig config;
  config.grid_level = 2;  // keep the unit suite quick
  config.repetitions = 5;
  config.warmup = 1;
  const BenchReport report = run_bench(array_preset("respeaker-core"), config);

  REQUIRE(report.array == "respeaker-core");
  REQUIRE(report.mics == 6);
  REQUIRE(report.pairs == 15);
  REQUIRE(report.groups == 9);
  REQUIRE(report.frame_size == 512);
  REQUIRE(report.k == 4);
  REQUIRE(report.repetitions == 5);
  REQUIRE_FALSE(report.machine.empty());
  REQUIRE(report.srp.mean_ms > 0.0);
  REQUIRE(report.smp.mean_ms > 0.0);

  const OpCounts expected = count_ops(report.pairs, report.groups, report.frame_size, report.dirs);
  REQUIRE(report.srp.ops == expected.srp);
  REQUIRE(report.smp.ops == expected.smp);
}

TEST_CASE("counter fields are deterministic across runs") {
  BenchConfig config;
  config.grid_level = 1;
  config.repetitions = 2;
  config.warmup = 0;
  const BenchReport a = run_bench(array_preset("respeaker-usb"), config);
  const BenchReport b = run_bench(array_preset("respeaker-usb"), config);
  REQUIRE(a.srp.ops == b.srp.ops);
  REQUIRE(a.smp.ops == b.smp.ops);
  REQUIRE(a.pairs == b.pairs);
  REQUIRE(a.groups == b.groups);
}
