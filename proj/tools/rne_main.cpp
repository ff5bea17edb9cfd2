// Command-line front end: single runs, ablation batches, scenario validation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rne/environment.hpp"
#include "rne/errors.hpp"
#include "rne/scenario.hpp"
#include "rne/sim.hpp"
#include "rne/variants.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeLimit = 2;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rne::ConfigError("cannot write " + path.string());
  out << content;
}

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<std::string> local_sampling;
  std::optional<double> g_min, t_exit, d_min, d_max, r_ls, h_max;
  std::optional<double> interrupt_margin, time_limit, tick, scan_interval;
  std::optional<int> gain_latency;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--mode", mode, "graph|tree")
        ->check(CLI::IsMember({"graph", "tree"}));
    cmd->add_option("--local-sampling", local_sampling, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--g-min", g_min, "explored threshold (gain fraction)");
    cmd->add_option("--t-exit", t_exit, "exit timer, s");
    cmd->add_option("--d-min", d_min, "min node spacing, m");
    cmd->add_option("--d-max", d_max, "graph connection radius, m");
    cmd->add_option("--r-ls", r_ls, "local sampling radius, m");
    cmd->add_option("--h-max", h_max, "ground snap tolerance, m");
    cmd->add_option("--interrupt-margin", interrupt_margin,
                    "GCR margin for goal switching");
    cmd->add_option("--time-limit", time_limit, "simulated time budget, s");
    cmd->add_option("--tick", tick, "tick length, s");
    cmd->add_option("--scan-interval", scan_interval, "periodic scan, s");
    cmd->add_option("--gain-latency", gain_latency,
                    "gain worker latency, ticks");
  }

  void apply(rne::ScenarioConfig& cfg) const {
    if (seed) cfg.seed = *seed;
    if (mode) cfg.mode = *mode == "tree" ? rne::GraphMode::Tree : rne::GraphMode::Graph;
    if (local_sampling) cfg.local_sampling = *local_sampling == "on";
    if (g_min) cfg.planner.g_min = *g_min;
    if (t_exit) cfg.planner.t_exit = *t_exit;
    if (d_min) cfg.planner.d_min = *d_min;
    if (d_max) cfg.planner.d_max = *d_max;
    if (r_ls) cfg.planner.r_ls = *r_ls;
    if (h_max) cfg.planner.h_max = *h_max;
    if (interrupt_margin) cfg.planner.interrupt_margin = *interrupt_margin;
    if (time_limit) cfg.sim.time_limit = *time_limit;
    if (tick) cfg.sim.tick_seconds = *tick;
    if (scan_interval) cfg.sim.scan_interval = *scan_interval;
    if (gain_latency) cfg.sim.gain_latency_ticks = *gain_latency;
  }
};

void write_run_artifacts(const fs::path& dir, const rne::RunResult& result) {
  fs::create_directories(dir);
  write_file(dir / "events.log", result.event_log);
  write_file(dir / "metrics.csv", rne::format_metrics_csv(result.series));
  write_file(dir / "graph.txt", result.graph_snapshot);
  write_file(dir / "map.txt", result.map_dump);
}

int cmd_run(const std::string& scenario_path, const Overrides& overrides,
            const std::string& out_dir) {
  rne::ScenarioConfig cfg = rne::load_scenario(scenario_path);
  overrides.apply(cfg);
  if (const auto violations = rne::validate_config(cfg); !violations.empty()) {
    for (const auto& v : violations) std::printf("violation: %s\n", v.c_str());
    std::printf("status=error msg=\"invalid scenario\"\n");
    return kExitError;
  }
  const rne::RunResult result = rne::run_to_completion(cfg);
  write_run_artifacts(out_dir, result);
  std::printf(
      "status=%s outcome=%s duration_s=%.3f path_m=%.3f volume_m3=%.6f "
      "nodes=%d edges=%d\n",
      result.outcome == rne::RunOutcome::Natural ? "ok" : "time-limit",
      rne::to_string(result.outcome), result.duration, result.path_length,
      result.mapped_volume, result.nodes, result.edges);
  return result.outcome == rne::RunOutcome::Natural ? kExitOk : kExitTimeLimit;
}

int cmd_bench(const std::string& scenario_path, const Overrides& overrides,
              const std::string& out_dir, int seeds,
              std::uint64_t seed_base,
              const std::vector<std::string>& variant_names) {
  rne::ScenarioConfig base = rne::load_scenario(scenario_path);
  overrides.apply(base);
  if (const auto violations = rne::validate_config(base); !violations.empty()) {
    for (const auto& v : violations) std::printf("violation: %s\n", v.c_str());
    std::printf("status=error msg=\"invalid scenario\"\n");
    return kExitError;
  }

  std::vector<rne::Variant> variants;
  for (const auto& name : variant_names)
    variants.push_back(rne::parse_variant(name));
  std::vector<std::uint64_t> seed_list;
  for (int i = 0; i < seeds; ++i) seed_list.push_back(seed_base + i);

  fs::create_directories(out_dir);
  const auto records = rne::run_batch(
      base, variants, seed_list, [&](const rne::RunRecord& rec) {
        char tag[64];
        std::snprintf(tag, sizeof(tag), "%s-seed%llu", rne::to_string(rec.variant),
                      static_cast<unsigned long long>(rec.seed));
        if (!rec.ok) {
          std::printf("run %s failed: %s\n", tag, rec.error.c_str());
          return;
        }
        write_run_artifacts(fs::path(out_dir) / tag, rec.result);
        std::printf("run %s: outcome=%s duration_s=%.3f path_m=%.3f volume_m3=%.6f\n",
                    tag, rne::to_string(rec.result.outcome), rec.result.duration,
                    rec.result.path_length, rec.result.mapped_volume);
      });

  const auto summaries = rne::summarize(records);
  const std::string table = rne::format_summary(summaries);
  write_file(fs::path(out_dir) / "summary.csv", table);
  std::printf("%s", table.c_str());

  int ok_runs = 0;
  for (const auto& r : records) ok_runs += r.ok ? 1 : 0;
  if (ok_runs == 0) {
    std::printf("status=error msg=\"all runs failed\"\n");
    return kExitError;
  }
  std::printf("status=ok runs=%zu failures=%zu\n", records.size(),
              records.size() - ok_runs);
  return kExitOk;
}

int cmd_validate(const std::string& scenario_path) {
  rne::ScenarioConfig cfg = rne::load_scenario(scenario_path);
  const auto violations = rne::validate_scenario_world(cfg);
  for (const auto& v : violations) std::printf("violation: %s\n", v.c_str());
  if (violations.empty()) {
    std::printf("status=valid\n");
    return kExitOk;
  }
  std::printf("status=invalid violations=%zu\n", violations.size());
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-based next-best-view exploration simulator"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = "rne-out";
  Overrides overrides;

  CLI::App* run = app.add_subcommand("run", "Run one scenario");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "artifact directory");
  overrides.add_flags(run);

  int seeds = 10;
  std::uint64_t seed_base = 1;
  std::vector<std::string> variant_names = {"rne", "rrg", "rrt+ls", "rrt"};
  CLI::App* bench = app.add_subcommand("bench", "Run an ablation batch");
  bench->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  bench->add_option("--out", out_dir, "artifact directory");
  bench->add_option("--seeds", seeds, "number of seeds per variant");
  bench->add_option("--seed-base", seed_base, "first seed value");
  bench->add_option("--variants", variant_names, "comma list: rne,rrg,rrt+ls,rrt")
      ->delimiter(',');
  overrides.add_flags(bench);

  CLI::App* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", scenario_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(scenario_path, overrides, out_dir);
    if (bench->parsed())
      return cmd_bench(scenario_path, overrides, out_dir, seeds, seed_base,
                       variant_names);
    if (validate->parsed()) return cmd_validate(scenario_path);
  } catch (const std::exception& e) {
    std::printf("status=error msg=\"%s\"\n", e.what());
    return kExitError;
  }
  return kExitError;
}
