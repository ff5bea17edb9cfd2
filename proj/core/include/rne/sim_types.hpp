#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rne {

enum class RunOutcome {
  Natural,    // exit timer fired: nothing left to explore
  TimeLimit,  // simulated time budget exhausted first
};

const char* to_string(RunOutcome o);

struct MetricsRow {
  std::int64_t tick = 0;
  double sim_time = 0.0;      // s
  double path_length = 0.0;   // m
  double mapped_volume = 0.0; // m^3
  int nodes = 0;
  int edges = 0;
};

struct RunResult {
  RunOutcome outcome = RunOutcome::Natural;
  double duration = 0.0;      // simulated s at termination
  double path_length = 0.0;   // m
  double mapped_volume = 0.0; // m^3
  int nodes = 0;
  int edges = 0;
  std::vector<MetricsRow> series;
  std::string event_log;      // one event per line
  std::string graph_snapshot; // node/edge records
  std::string map_dump;       // layered-ASCII robot map
};

/// Metrics series as delimited text (header + one row per sample).
std::string format_metrics_csv(const std::vector<MetricsRow>& rows);

}  // namespace rne
