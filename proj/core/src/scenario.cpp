#include "rne/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rne/environment.hpp"
#include "rne/errors.hpp"
#include "rne/grid_map.hpp"
#include "rne/pollset.hpp"

namespace rne {
namespace {

using nlohmann::json;

double num(const json& obj, const char* key, double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) throw ParseError(std::string("scenario: '") + key + "' must be a number");
  return it->get<double>();
}

int integer(const json& obj, const char* key, int fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw ParseError(std::string("scenario: '") + key + "' must be an integer");
  return it->get<int>();
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (base_dir.empty()) return path;
  return base_dir + "/" + path;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text,
                              const std::string& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("scenario: top level must be an object");

  ScenarioConfig c;
  c.name = root.value("name", std::string("scenario"));
  if (!root.contains("environment") || !root["environment"].is_string())
    throw ParseError("scenario: missing 'environment' path");
  c.environment_path = resolve(base_dir, root["environment"].get<std::string>());

  if (root.contains("spawn")) {
    const json& s = root["spawn"];
    c.spawn = {num(s, "x", 0.0), num(s, "y", 0.0)};
    c.spawn_yaw = deg_to_rad(num(s, "yaw_deg", 0.0));
  }

  if (root.contains("sensor")) {
    const json& s = root["sensor"];
    c.sensor.hfov = deg_to_rad(num(s, "hfov_deg", 360.0));
    c.sensor.vfov_min = deg_to_rad(num(s, "vfov_min_deg", -15.0));
    c.sensor.vfov_max = deg_to_rad(num(s, "vfov_max_deg", 15.0));
    c.sensor.r_min = num(s, "r_min", c.sensor.r_min);
    c.sensor.r_max = num(s, "r_max", c.sensor.r_max);
    c.sensor.h_sensor = num(s, "h_sensor", c.sensor.h_sensor);
    c.sensor.rays_azimuth = integer(s, "rays_azimuth", c.sensor.rays_azimuth);
    c.sensor.rays_elevation = integer(s, "rays_elevation", c.sensor.rays_elevation);
  }

  if (root.contains("robot")) {
    const json& r = root["robot"];
    c.robot.footprint.r_robot = num(r, "r_robot", c.robot.footprint.r_robot);
    c.robot.footprint.w_robot = num(r, "w_robot", c.robot.footprint.w_robot);
    c.robot.height = num(r, "height", c.robot.height);
    c.robot.step_tolerance = num(r, "step_tolerance", c.robot.step_tolerance);
    c.robot.linear_speed = num(r, "linear_speed", c.robot.linear_speed);
    c.robot.angular_speed = num(r, "angular_speed", c.robot.angular_speed);
  }

  if (root.contains("planner")) {
    const json& p = root["planner"];
    c.planner.d_min = num(p, "d_min", c.planner.d_min);
    c.planner.d_max = num(p, "d_max", c.planner.d_max);
    c.planner.r_ls = num(p, "r_ls", c.planner.r_ls);
    c.planner.delta_r = num(p, "delta_r", c.planner.delta_r);
    c.planner.delta_theta = deg_to_rad(num(p, "delta_theta_deg", 10.0));
    c.planner.delta_phi = deg_to_rad(num(p, "delta_phi_deg", 10.0));
    c.planner.g_min = num(p, "g_min", c.planner.g_min);
    c.planner.t_exit = num(p, "t_exit", c.planner.t_exit);
    c.planner.h_max = num(p, "h_max", c.planner.h_max);
    c.planner.interrupt_margin = num(p, "interrupt_margin", 0.0);
  }

  if (root.contains("sim")) {
    const json& s = root["sim"];
    c.sim.tick_seconds = num(s, "tick_seconds", c.sim.tick_seconds);
    c.sim.time_limit = num(s, "time_limit", c.sim.time_limit);
    c.sim.scan_interval = num(s, "scan_interval", c.sim.scan_interval);
    c.sim.gain_latency_ticks = integer(s, "gain_latency_ticks", c.sim.gain_latency_ticks);
    c.sim.metrics_interval_ticks = integer(s, "metrics_interval_ticks", c.sim.metrics_interval_ticks);
  }

  if (root.contains("mode")) {
    const std::string m = root["mode"].get<std::string>();
    if (m == "graph") c.mode = GraphMode::Graph;
    else if (m == "tree") c.mode = GraphMode::Tree;
    else throw ParseError("scenario: mode must be 'graph' or 'tree'");
  }
  if (root.contains("local_sampling")) {
    if (!root["local_sampling"].is_boolean())
      throw ParseError("scenario: 'local_sampling' must be a boolean");
    c.local_sampling = root["local_sampling"].get<bool>();
  }
  if (root.contains("seed")) c.seed = root["seed"].get<std::uint64_t>();
  return c;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string dir = ".";
  if (const auto slash = path.find_last_of('/'); slash != std::string::npos)
    dir = path.substr(0, slash);
  return parse_scenario(ss.str(), dir);
}

std::vector<std::string> validate_config(const ScenarioConfig& c) {
  std::vector<std::string> out;
  auto req = [&](bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
  };
  req(c.robot.footprint.w_robot > 0.0, "w_robot must be positive");
  req(c.robot.footprint.valid(),
      "footprint requires r_robot >= w_robot/2 (disc must cover the corridor width)");
  req(c.robot.height > 0.0, "robot height must be positive");
  req(c.robot.step_tolerance >= 0.0, "step_tolerance must be non-negative");
  req(c.robot.linear_speed > 0.0, "linear_speed must be positive");
  req(c.robot.angular_speed > 0.0, "angular_speed must be positive");
  req(c.sensor.valid(), "sensor model invalid (FoV ordering, ranges, ray counts)");
  req(c.sensor.h_sensor > 0.0, "h_sensor must be positive");
  req(c.planner.d_min > 0.0, "d_min must be positive");
  req(c.planner.d_max >= c.planner.d_min, "d_max must be >= d_min");
  req(c.planner.r_ls > 0.0, "r_ls must be positive");
  req(c.planner.delta_r > 0.0, "delta_r must be positive");
  req(c.planner.delta_theta > 0.0, "delta_theta must be positive");
  req(c.planner.delta_phi > 0.0, "delta_phi must be positive");
  req(c.planner.g_min >= 0.0 && c.planner.g_min <= 1.0, "g_min must be in [0, 1]");
  req(c.planner.t_exit > 0.0, "t_exit must be positive");
  req(c.planner.h_max >= 0.0, "h_max must be non-negative");
  req(c.planner.interrupt_margin >= 0.0, "interrupt_margin must be non-negative");
  req(c.sim.tick_seconds > 0.0, "tick_seconds must be positive");
  req(c.sim.time_limit > 0.0, "time_limit must be positive");
  req(c.sim.scan_interval > 0.0, "scan_interval must be positive");
  req(c.sim.gain_latency_ticks >= 1, "gain_latency_ticks must be >= 1");
  req(c.sim.metrics_interval_ticks >= 1, "metrics_interval_ticks must be >= 1");
  if (c.sensor.valid() && c.planner.delta_r > 0.0 && c.planner.delta_theta > 0.0 &&
      c.planner.delta_phi > 0.0) {
    try {
      if (pollset_cardinality(c.sensor, c.planner.delta_r, c.planner.delta_theta,
                              c.planner.delta_phi) <= 0)
        out.push_back("poll lattice is empty for the given sensor and step sizes");
    } catch (const ConfigError& e) {
      out.push_back(e.what());
    }
  }
  return out;
}

std::vector<std::string> validate_scenario_world(const ScenarioConfig& c) {
  std::vector<std::string> out = validate_config(c);
  VoxelMap truth;
  try {
    truth = load_environment_file(c.environment_path);
  } catch (const std::exception& e) {
    out.push_back(e.what());
    return out;
  }
  const GridMap2D grid =
      derive_grid(truth, c.robot.height, c.robot.step_tolerance);
  if (!grid.traversable(c.spawn)) out.push_back("spawn not traversable");
  return out;
}

}  // namespace rne
