#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rne/geom.hpp"
#include "rne/graph.hpp"
#include "rne/sensor.hpp"
#include "rne/steer.hpp"

namespace rne {

struct RobotParams {
  RobotFootprint footprint;      // r_robot / w_robot, Eq. 1 geometry
  double height = 0.4;           // m of Free clearance the robot needs
  double step_tolerance = 0.15;  // m of ground-height change it can climb
  double linear_speed = 1.0;     // m/s
  double angular_speed = kPi;    // rad/s
};

struct PlannerTuning {
  double d_min = 1.0;   // minimum node spacing / tree edge length
  double d_max = 2.0;   // graph connection radius
  double r_ls = 5.0;    // local sampling radius
  double delta_r = 0.1;
  double delta_theta = deg_to_rad(10.0);
  double delta_phi = deg_to_rad(10.0);
  double g_min = 0.05;  // explored threshold, fraction of max window gain
  double t_exit = 10.0; // s
  double h_max = 0.5;   // ground snapping tolerance, m
  double interrupt_margin = 0.0; // relative goal-switch hysteresis
};

struct SimTuning {
  double tick_seconds = 0.1;
  double time_limit = 1800.0;       // simulated s; expiry flagged distinctly
  double scan_interval = 1.0;       // s between periodic scans
  int gain_latency_ticks = 1;       // mailbox delay of the gain worker
  int metrics_interval_ticks = 10;  // sampling stride of the metrics series
};

struct ScenarioConfig {
  std::string name;
  std::string environment_path;  // resolved against the scenario file
  Vec2d spawn;
  double spawn_yaw = 0.0;
  SensorModel sensor;
  RobotParams robot;
  PlannerTuning planner;
  SimTuning sim;
  GraphMode mode = GraphMode::Graph;
  bool local_sampling = true;
  std::uint64_t seed = 1;
};

/// Parses the JSON text of a scenario file. Relative environment paths are
/// resolved against base_dir. Throws ParseError on malformed input.
ScenarioConfig parse_scenario(const std::string& json_text,
                              const std::string& base_dir);

/// Reads and parses a scenario file. Throws ParseError / ConfigError.
ScenarioConfig load_scenario(const std::string& path);

/// Parameter-level invariant check; one message per violation, empty = valid.
std::vector<std::string> validate_config(const ScenarioConfig& config);

/// Deep check: loads the environment, derives the ground-truth grid and
/// verifies the spawn tile is traversable. Includes validate_config output.
std::vector<std::string> validate_scenario_world(const ScenarioConfig& config);

}  // namespace rne
