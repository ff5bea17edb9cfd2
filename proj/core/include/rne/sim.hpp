#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rne/gain_worker.hpp"
#include "rne/graph.hpp"
#include "rne/grid_map.hpp"
#include "rne/path_table.hpp"
#include "rne/planner.hpp"
#include "rne/rng.hpp"
#include "rne/scenario.hpp"
#include "rne/sim_types.hpp"
#include "rne/voxel_map.hpp"

namespace rne {

// Deterministic closed-loop exploration run: one instance owns the ground
// truth, the robot's map and grid, the graph, the planner and the simulated
// clock. step() advances exactly one tick; everything downstream (metrics,
// logs, artifacts) is a pure function of (config, seed).
class Simulation {
 public:
  Simulation(const ScenarioConfig& config, VoxelMap truth);

  /// Advances one tick. Returns false once the run is over (natural
  /// termination or time limit).
  bool step();

  /// Runs until termination and packages metrics plus artifacts.
  RunResult finish();

  bool terminated() const { return outcome_.has_value(); }
  std::int64_t tick() const { return tick_; }
  double sim_time() const { return static_cast<double>(tick_) * cfg_.sim.tick_seconds; }

  // Introspection for tests.
  const ScenarioConfig& config() const { return cfg_; }
  const VoxelMap& truth() const { return truth_; }
  const VoxelMap& robot_map() const { return map_; }
  const GridMap2D& grid() const { return grid_; }
  const RrgGraph& graph() const { return graph_; }
  RrgGraph& graph_mut() { return graph_; }
  const Planner& planner() const { return planner_; }
  const PathTable& paths() const { return paths_; }
  const EventLog& events() const { return log_; }
  const Vec3d& robot_position() const { return pos_; }
  double robot_yaw() const { return yaw_; }
  double path_length() const { return path_length_; }
  const std::vector<MetricsRow>& metrics() const { return metrics_; }

 private:
  void do_scan();
  void motion_phase();
  void scan_phase();
  void planning_phase();
  void expansion_phase();
  void anchor_phase();
  void termination_phase();
  void metrics_phase();
  void clear_route();
  void resolve_goal(GoalEvent event);
  void follow_ground();
  bool advance_toward(const Vec2d& target);
  void try_expand(const Vec2d& candidate);

  ScenarioConfig cfg_;
  VoxelMap truth_;
  VoxelMap map_;
  GridMap2D truth_grid_;
  GridMap2D grid_;
  RrgGraph graph_;
  PathTable paths_;
  EventLog log_;
  GainWorker worker_;  // before planner_: its poll set defines g_max
  Planner planner_;
  Rng rng_;

  Vec3d pos_;
  double yaw_ = 0.0;
  std::int64_t tick_ = 0;
  double path_length_ = 0.0;
  double last_scan_time_ = -1e18;
  bool scan_due_ = false;          // arrival scans

  std::vector<int> route_;         // node ids, anchor..goal
  std::size_t route_next_ = 0;     // index of the waypoint being approached
  bool aligning_final_yaw_ = false;

  std::vector<MetricsRow> metrics_;
  std::optional<RunOutcome> outcome_;
};

/// Loads the environment and runs the whole scenario.
RunResult run_to_completion(const ScenarioConfig& config);

}  // namespace rne
