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

// Command-line front end: plan, grid, locate, simulate, bench and count
// subcommands over the header-only library. Exit codes: 0 success, 1 usage
// error, 2 runtime error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smpphat/array_config.hpp"
#include "smpphat/smpphat.hpp"

namespace {

using nlohmann::json;
using namespace smpphat;

// Flat JSON config files: {"array": "respeaker-usb", "n": 512, ...}. Keys map
// to the active subcommand's long options; values given on the command line
// win. Applied by rewriting the argument vector before parsing, so required
// options can be satisfied from the file.
std::vector<std::string> apply_config_file(const CLI::App& app,
                                           const std::vector<std::string>& args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty() || args.empty()) return args;

  const CLI::App* sub = nullptr;
  for (const CLI::App* candidate : app.get_subcommands({})) {
    if (candidate->get_name() == args.front()) sub = candidate;
  }
  if (sub == nullptr) return args;

  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + config_path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("config root must be a JSON object");

  std::vector<std::string> out = args;
  for (const auto& [key, value] : doc.items()) {
    const std::string flag = "--" + key;
    bool given = false;
    for (const std::string& arg : args) {
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) given = true;
    }
    if (given) continue;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) throw std::runtime_error("config key \"" + key + "\" is not an option of " +
                                                 sub->get_name());
    if (opt->get_expected_min() == 0) {  // flag
      if (value.is_boolean() && !value.get<bool>()) continue;
      out.push_back(flag);
      continue;
    }
    auto push_value = [&](const json& v) {
      out.push_back(flag);
      out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (value.is_array()) {
      for (const auto& entry : value) push_value(entry);
    } else {
      push_value(value);
    }
  }
  return out;
}

void add_config_support(CLI::App* sub) {
  sub->add_option("--config", "JSON file supplying option values");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
  out << text;
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json counters_json(const OpCounters& c) {
  return {{"iffts", c.iffts}, {"lookups", c.lookups}, {"additions", c.additions}};
}

long pct(double fraction) { return std::lround(fraction * 100.0); }

struct OutputFormat {
  bool json_out = false;
  bool csv_out = false;
};

void add_format_flags(CLI::App* sub, OutputFormat& fmt) {
  auto* j = sub->add_flag("--json", fmt.json_out, "emit JSON");
  sub->add_flag("--csv", fmt.csv_out, "emit CSV")->excludes(j);
}

// ---------------------------------------------------------------------------
// plan

struct PlanArgs {
  std::string array;
  double epsilon = 1e-4;
  std::string out;
  OutputFormat fmt;
};

int run_plan(const PlanArgs& args) {
  const MicArray array = load_array(args.array);
  const MergePlan plan = build_merge_plan(enumerate_pairs(array), args.epsilon);
  if (args.fmt.csv_out) {
    std::ostringstream csv;
    csv << "group,ref,pair,sign\n";
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
      for (const auto& member : plan.groups[g].members) {
        csv << g + 1 << ',' << plan.groups[g].ref + 1 << ',' << member.pair + 1 << ','
            << member.sign << '\n';
      }
    }
    emit(csv.str(), args.out);
    return 0;
  }
  // pair indices are one-based in the exported plan
  json doc = json::array();
  for (const auto& group : plan.groups) {
    json members = json::array();
    for (const auto& member : group.members) {
      members.push_back(json::array({member.pair + 1, member.sign}));
    }
    doc.push_back({{"ref", group.ref + 1}, {"members", members}});
  }
  emit(doc.dump(2) + "\n", args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// grid

struct GridArgs {
  int level = 4;
  bool full = false;
  std::string array;
  double fs = 16000.0;
  double c = 343.0;
  int k = 4;
  std::string dump_tdoa;
  std::string out;
  OutputFormat fmt;
};

int run_grid(const GridArgs& args) {
  const DoaGrid grid = build_doa_grid(args.level, !args.full);
  if (!args.dump_tdoa.empty()) {
    if (args.array.empty()) throw std::runtime_error("--dump-tdoa requires --array");
    const MicArray array = load_array(args.array);
    const PairSet pairs = enumerate_pairs(array);
    const TdoaTable table = build_tdoa_table(pairs, grid, args.fs, args.c, args.k);
    json doc = {{"array", array.name}, {"fs", table.fs},           {"c", table.c},
                {"k", table.k},        {"pairs", table.num_pairs}, {"dirs", table.num_dirs}};
    json rows = json::array();
    for (std::size_t p = 0; p < table.num_pairs; ++p) {
      json row = json::array();
      for (std::size_t i = 0; i < table.num_dirs; ++i) row.push_back(table.at(p, i));
      rows.push_back(std::move(row));
    }
    doc["delays"] = std::move(rows);
    std::ofstream out(args.dump_tdoa);
    if (!out) throw std::runtime_error("cannot write tdoa dump: " + args.dump_tdoa);
    out << doc.dump() << "\n";
  }
  if (args.fmt.csv_out) {
    std::ostringstream csv;
    csv << "index,x,y,z,azimuth_deg,elevation_deg\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Vec3& u = grid.dirs[i];
      csv << i << ',' << u.x << ',' << u.y << ',' << u.z << ',' << azimuth_deg(u) << ','
          << elevation_deg(u) << '\n';
    }
    emit(csv.str(), args.out);
    return 0;
  }
  json doc = {{"level", grid.level}, {"hemisphere", grid.hemisphere}, {"count", grid.size()}};
  json dirs = json::array();
  for (const Vec3& u : grid.dirs) dirs.push_back(vec_json(u));
  doc["dirs"] = std::move(dirs);
  emit(doc.dump(2) + "\n", args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// locate

struct LocateArgs {
  std::string array;
  std::string wav;
  std::string method = "srp";
  double fs = 16000.0;
  std::size_t frame_size = 512;
  std::size_t hop = 0;  // 0 = frame_size / 2
  int k = 4;
  std::size_t block = 8;
  int grid_level = 4;
  double c = 343.0;
  double epsilon = 1e-4;
  std::string window = "hann";
  std::string out;
  OutputFormat fmt;
};

int run_locate(const LocateArgs& args) {
  const MicArray array = load_array(args.array);
  const AudioBuffer audio = read_wav(args.wav);
  if (audio.num_channels() != array.size()) {
    throw std::runtime_error("wav has " + std::to_string(audio.num_channels()) +
                             " channels but the array has " + std::to_string(array.size()) +
                             " microphones");
  }
  if (audio.sample_rate != args.fs) {
    throw std::runtime_error("wav sample rate " + std::to_string(audio.sample_rate) +
                             " does not match --fs " + std::to_string(args.fs) +
                             " (no resampling)");
  }

  const PairSet pairs = enumerate_pairs(array);
  const DoaGrid grid = build_doa_grid(args.grid_level, true);
  const TdoaTable table = build_tdoa_table(pairs, grid, args.fs, args.c, args.k);
  const MergePlan plan = build_merge_plan(pairs, args.epsilon);
  const std::size_t hop = args.hop == 0 ? args.frame_size / 2 : args.hop;
  const Window window = args.window == "rect" ? Window::rectangular : Window::hann;

  const auto frames = stft(audio.channels, args.frame_size, hop, window);
  const std::size_t num_blocks = frames.size() / args.block;
  if (num_blocks == 0) throw std::runtime_error("audio shorter than one localization block");

  std::vector<LocalizationResult> results;
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const std::span<const SpectralFrame> window_span(frames.data() + b * args.block, args.block);
    const PhatSpectra spectra = phat(cross_spectrum(window_span, pairs, args.block));
    LocalizationResult result = args.method == "smp" ? smp_phat(spectra, plan, table, grid)
                                                     : srp_phat(spectra, table, grid);
    result.block_start_frame = b * args.block;
    result.block_frames = args.block;
    results.push_back(result);
  }

  if (args.fmt.json_out) {
    json doc = json::array();
    for (std::size_t b = 0; b < results.size(); ++b) {
      const auto& r = results[b];
      doc.push_back({{"block", b},
                     {"direction", vec_json(r.direction)},
                     {"energy", r.energy},
                     {"azimuth_deg", azimuth_deg(r.direction)},
                     {"elevation_deg", elevation_deg(r.direction)}});
    }
    emit(doc.dump(2) + "\n", args.out);
    return 0;
  }
  std::ostringstream csv;
  csv << "block_index,x,y,z,energy,azimuth_deg,elevation_deg\n";
  csv.precision(10);
  for (std::size_t b = 0; b < results.size(); ++b) {
    const auto& r = results[b];
    csv << b << ',' << r.direction.x << ',' << r.direction.y << ',' << r.direction.z << ','
        << r.energy << ',' << azimuth_deg(r.direction) << ',' << elevation_deg(r.direction)
        << '\n';
  }
  emit(csv.str(), args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string array;
  std::string method = "both";
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::string out;
  std::string dump_wav;
  std::string room = "10x10x3";
  double rt60_min = 0.2;
  double rt60_max = 0.5;
  double duration = 1.0;
  double fs = 16000.0;
  double c = 343.0;
  int max_order = 6;
  std::size_t frame_size = 512;
  std::size_t block = 8;
  int k = 4;
  int grid_level = 4;
  OutputFormat fmt;
};

Vec3 parse_room_dims(const std::string& text) {
  Vec3 dims;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(text);
  if (!(in >> dims.x >> sep1 >> dims.y >> sep2 >> dims.z) || sep1 != 'x' || sep2 != 'x') {
    throw std::runtime_error("room dimensions must look like 10x10x3");
  }
  return dims;
}

int run_simulate(const SimulateArgs& args) {
  const MicArray array = load_array(args.array);
  CampaignConfig config;
  config.room_dims = parse_room_dims(args.room);
  config.rt60_min = args.rt60_min;
  config.rt60_max = args.rt60_max;
  config.fs = args.fs;
  config.c = args.c;
  config.max_order = args.max_order;
  config.frame_size = args.frame_size;
  config.hop = args.frame_size / 2;
  config.block = args.block;
  config.k = args.k;
  config.grid_level = args.grid_level;
  config.duration = args.duration;

  std::vector<Method> methods;
  if (args.method == "both") {
    methods = {Method::srp, Method::smp};
  } else {
    methods = {args.method == "smp" ? Method::smp : Method::srp};
  }

  const auto reports = run_campaign(config, array, methods, args.trials, args.seed);

  if (!args.dump_wav.empty()) {
    std::filesystem::create_directories(args.dump_wav);
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
      const RenderedTrial rendered = render_trial(config, array, trial, args.seed);
      AudioBuffer audio;
      audio.sample_rate = config.fs;
      audio.channels = rendered.channels;
      char name[32];
      std::snprintf(name, sizeof(name), "trial_%04zu.wav", trial);
      write_wav((std::filesystem::path(args.dump_wav) / name).string(), audio);
    }
  }

  if (args.fmt.csv_out) {
    std::ostringstream csv;
    csv << "method,trial,truth_x,truth_y,truth_z,pred_x,pred_y,pred_z,error_deg\n";
    for (const auto& report : reports) {
      for (std::size_t t = 0; t < report.trials.size(); ++t) {
        const auto& r = report.trials[t];
        csv << report.method << ',' << t << ',' << r.truth.x << ',' << r.truth.y << ','
            << r.truth.z << ',' << r.predicted.x << ',' << r.predicted.y << ',' << r.predicted.z
            << ',' << r.error_deg << '\n';
      }
    }
    emit(csv.str(), args.out);
    return 0;
  }

  json doc = {{"array", array.name},
              {"seed", args.seed},
              {"trials", args.trials},
              {"room",
               {{"dims", vec_json(config.room_dims)},
                {"rt60_min", config.rt60_min},
                {"rt60_max", config.rt60_max},
                {"fs", config.fs},
                {"c", config.c},
                {"max_order", config.max_order}}},
              {"pipeline",
               {{"frame_size", config.frame_size},
                {"hop", config.hop},
                {"block", config.block},
                {"k", config.k},
                {"grid_level", config.grid_level},
                {"duration", config.duration}}}};
  json method_reports = json::array();
  for (const auto& report : reports) {
    json trials = json::array();
    for (const auto& r : report.trials) {
      trials.push_back({{"truth", vec_json(r.truth)},
                        {"predicted", vec_json(r.predicted)},
                        {"error_deg", r.error_deg},
                        {"best_block", r.best_block},
                        {"energy", r.energy}});
    }
    method_reports.push_back(
        {{"method", report.method}, {"mae_deg", report.mae_deg}, {"trials", std::move(trials)}});
  }
  doc["reports"] = std::move(method_reports);
  emit(doc.dump(2) + "\n", args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string array;
  std::string method = "both";
  std::size_t repetitions = 100;
  std::size_t warmup = 10;
  std::size_t frame_size = 512;
  int grid_level = 4;
  int k = 4;
  double fs = 16000.0;
  double c = 343.0;
  std::uint64_t seed = 1;
  std::string out;
  OutputFormat fmt;
};

int run_bench_cmd(const BenchArgs& args) {
  BenchConfig config;
  config.frame_size = args.frame_size;
  config.grid_level = args.grid_level;
  config.k = args.k;
  config.fs = args.fs;
  config.c = args.c;
  config.repetitions = args.repetitions;
  config.warmup = args.warmup;
  config.seed = args.seed;

  const BenchReport report = run_bench(load_array(args.array), config);
  const OpCounts expected = count_ops(report.pairs, report.groups, report.frame_size, report.dirs);
  const bool counters_match = report.srp.ops == expected.srp && report.smp.ops == expected.smp;
  const bool want_srp = args.method != "smp";
  const bool want_smp = args.method != "srp";

  if (args.fmt.csv_out) {
    std::ostringstream csv;
    csv << "method,mean_ms,stddev_ms,iffts,lookups,additions\n";
    auto row = [&](const char* name, const MethodTiming& t) {
      csv << name << ',' << t.mean_ms << ',' << t.stddev_ms << ',' << t.ops.iffts << ','
          << t.ops.lookups << ',' << t.ops.additions << '\n';
    };
    if (want_srp) row("srp", report.srp);
    if (want_smp) row("smp", report.smp);
    emit(csv.str(), args.out);
    return 0;
  }

  json doc = {{"array", report.array},
              {"machine", report.machine},
              {"mics", report.mics},
              {"pairs", report.pairs},
              {"groups", report.groups},
              {"dirs", report.dirs},
              {"frame_size", report.frame_size},
              {"k", report.k},
              {"repetitions", report.repetitions},
              {"warmup", report.warmup},
              {"counters_match_analytic", counters_match}};
  auto timing_json = [](const MethodTiming& t) {
    json j = counters_json(t.ops);
    j["mean_ms"] = t.mean_ms;
    j["stddev_ms"] = t.stddev_ms;
    return j;
  };
  if (want_srp) doc["srp"] = timing_json(report.srp);
  if (want_smp) doc["smp"] = timing_json(report.smp);
  if (want_srp && want_smp) {
    doc["time_ratio_smp_over_srp"] = report.smp.mean_ms / report.srp.mean_ms;
  }
  emit(doc.dump(2) + "\n", args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::string array;
  std::size_t frame_size = 512;
  int grid_level = 4;
  double epsilon = 1e-4;
  std::string out;
  OutputFormat fmt;
};

int run_count(const CountArgs& args) {
  const MicArray array = load_array(args.array);
  const PairSet pairs = enumerate_pairs(array);
  const MergePlan plan = build_merge_plan(pairs, args.epsilon);
  const DoaGrid grid = build_doa_grid(args.grid_level, true);
  const OpCounts counts = count_ops(pairs.size(), plan.groups.size(), args.frame_size, grid.size());

  if (args.fmt.csv_out) {
    std::ostringstream csv;
    csv << "method,iffts,lookups,additions\n";
    csv << "srp," << counts.srp.iffts << ',' << counts.srp.lookups << ',' << counts.srp.additions
        << '\n';
    csv << "smp," << counts.smp.iffts << ',' << counts.smp.lookups << ',' << counts.smp.additions
        << '\n';
    csv << "delta_pct," << pct(counts.delta_iffts) << ',' << pct(counts.delta_lookups) << ','
        << pct(counts.delta_additions) << '\n';
    emit(csv.str(), args.out);
    return 0;
  }
  json doc = {{"array", array.name},
              {"mics", array.size()},
              {"pairs", pairs.size()},
              {"groups", plan.groups.size()},
              {"dirs", grid.size()},
              {"frame_size", args.frame_size},
              {"srp", counters_json(counts.srp)},
              {"smp", counters_json(counts.smp)},
              {"delta",
               {{"iffts", counts.delta_iffts},
                {"lookups", counts.delta_lookups},
                {"additions", counts.delta_additions},
                {"iffts_pct", pct(counts.delta_iffts)},
                {"lookups_pct", pct(counts.delta_lookups)},
                {"additions_pct", pct(counts.delta_additions)}}}};
  emit(doc.dump(2) + "\n", args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SRP-PHAT / SMP-PHAT sound source localization toolkit"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "print the pair-merging plan");
  plan_cmd->add_option("--array", plan_args.array, "array preset or JSON config")->required();
  plan_cmd->add_option("--epsilon", plan_args.epsilon, "merge tolerance");
  plan_cmd->add_option("--out", plan_args.out, "output file (default stdout)");
  add_format_flags(plan_cmd, plan_args.fmt);
  add_config_support(plan_cmd);

  GridArgs grid_args;
  auto* grid_cmd = app.add_subcommand("grid", "print the candidate direction grid");
  grid_cmd->add_option("--level", grid_args.level, "icosphere subdivision level (0..6)");
  grid_cmd->add_flag("--full", grid_args.full, "full sphere instead of the upper hemisphere");
  grid_cmd->add_option("--array", grid_args.array, "array for --dump-tdoa");
  grid_cmd->add_option("--fs", grid_args.fs, "sample rate for --dump-tdoa");
  grid_cmd->add_option("--c", grid_args.c, "speed of sound for --dump-tdoa");
  grid_cmd->add_option("--k", grid_args.k, "interpolation factor for --dump-tdoa");
  grid_cmd->add_option("--dump-tdoa", grid_args.dump_tdoa, "write the delay table to this file");
  grid_cmd->add_option("--out", grid_args.out, "output file (default stdout)");
  add_format_flags(grid_cmd, grid_args.fmt);
  add_config_support(grid_cmd);

  LocateArgs locate_args;
  auto* locate_cmd = app.add_subcommand("locate", "localize per block from a multichannel wav");
  locate_cmd->add_option("--array", locate_args.array, "array preset or JSON config")->required();
  locate_cmd->add_option("--wav", locate_args.wav, "multichannel wav file")->required();
  locate_cmd->add_option("--method", locate_args.method, "srp or smp")
      ->check(CLI::IsMember({"srp", "smp"}));
  locate_cmd->add_option("--fs", locate_args.fs, "expected sample rate");
  locate_cmd->add_option("--n", locate_args.frame_size, "frame size");
  locate_cmd->add_option("--hop", locate_args.hop, "hop size (default n/2)");
  locate_cmd->add_option("--k", locate_args.k, "interpolation factor");
  locate_cmd->add_option("--block", locate_args.block, "frames per localization");
  locate_cmd->add_option("--grid-level", locate_args.grid_level, "icosphere level");
  locate_cmd->add_option("--c", locate_args.c, "speed of sound");
  locate_cmd->add_option("--epsilon", locate_args.epsilon, "merge tolerance");
  locate_cmd->add_option("--window", locate_args.window, "hann or rect")
      ->check(CLI::IsMember({"hann", "rect"}));
  locate_cmd->add_option("--out", locate_args.out, "output file (default stdout)");
  add_format_flags(locate_cmd, locate_args.fmt);
  add_config_support(locate_cmd);

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "image-method accuracy campaign");
  sim_cmd->add_option("--array", sim_args.array, "array preset or JSON config")->required();
  sim_cmd->add_option("--method", sim_args.method, "srp, smp or both")
      ->check(CLI::IsMember({"srp", "smp", "both"}));
  sim_cmd->add_option("--trials", sim_args.trials, "number of simulations");
  sim_cmd->add_option("--seed", sim_args.seed, "master seed");
  sim_cmd->add_option("--out", sim_args.out, "report file (default stdout)");
  sim_cmd->add_option("--dump-wav", sim_args.dump_wav, "directory for per-trial wav dumps");
  sim_cmd->add_option("--room", sim_args.room, "room dimensions, e.g. 10x10x3");
  sim_cmd->add_option("--rt60-min", sim_args.rt60_min, "lower reverberation bound");
  sim_cmd->add_option("--rt60-max", sim_args.rt60_max, "upper reverberation bound");
  sim_cmd->add_option("--duration", sim_args.duration, "seconds of noise per trial");
  sim_cmd->add_option("--fs", sim_args.fs, "sample rate");
  sim_cmd->add_option("--c", sim_args.c, "speed of sound");
  sim_cmd->add_option("--max-order", sim_args.max_order, "image reflections per axis");
  sim_cmd->add_option("--n", sim_args.frame_size, "frame size");
  sim_cmd->add_option("--block", sim_args.block, "frames per localization");
  sim_cmd->add_option("--k", sim_args.k, "interpolation factor");
  sim_cmd->add_option("--grid-level", sim_args.grid_level, "icosphere level");
  add_format_flags(sim_cmd, sim_args.fmt);
  add_config_support(sim_cmd);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "wall-clock scan benchmark");
  bench_cmd->add_option("--array", bench_args.array, "array preset or JSON config")->required();
  bench_cmd->add_option("--method", bench_args.method, "srp, smp or both")
      ->check(CLI::IsMember({"srp", "smp", "both"}));
  bench_cmd->add_option("-R,--repetitions", bench_args.repetitions, "timed repetitions");
  bench_cmd->add_option("--warmup", bench_args.warmup, "discarded warm-up repetitions");
  bench_cmd->add_option("--n", bench_args.frame_size, "frame size");
  bench_cmd->add_option("--grid-level", bench_args.grid_level, "icosphere level");
  bench_cmd->add_option("--k", bench_args.k, "interpolation factor");
  bench_cmd->add_option("--fs", bench_args.fs, "sample rate");
  bench_cmd->add_option("--c", bench_args.c, "speed of sound");
  bench_cmd->add_option("--seed", bench_args.seed, "spectra seed");
  bench_cmd->add_option("--out", bench_args.out, "output file (default stdout)");
  add_format_flags(bench_cmd, bench_args.fmt);
  add_config_support(bench_cmd);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "analytic per-block operation counts");
  count_cmd->add_option("--array", count_args.array, "array preset or JSON config")->required();
  count_cmd->add_option("--n", count_args.frame_size, "frame size");
  count_cmd->add_option("--grid-level", count_args.grid_level, "icosphere level");
  count_cmd->add_option("--epsilon", count_args.epsilon, "merge tolerance");
  count_cmd->add_option("--out", count_args.out, "output file (default stdout)");
  add_format_flags(count_cmd, count_args.fmt);
  add_config_support(count_cmd);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = apply_config_file(app, args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (plan_cmd->parsed()) return run_plan(plan_args);
    if (grid_cmd->parsed()) return run_grid(grid_args);
    if (locate_cmd->parsed()) return run_locate(locate_args);
    if (sim_cmd->parsed()) return run_simulate(sim_args);
    if (bench_cmd->parsed()) return run_bench_cmd(bench_args);
    if (count_cmd->parsed()) return run_count(count_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
