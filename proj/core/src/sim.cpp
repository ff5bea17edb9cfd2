#include "rne/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rne/environment.hpp"
#include "rne/errors.hpp"
#include "rne/sampling.hpp"
#include "rne/sensor.hpp"

namespace rne {
namespace {

constexpr double kArriveEps = 1e-9;  // waypoint snap tolerance, m
constexpr double kYawEps = 1e-9;     // alignment tolerance, rad

PlannerParams planner_params(const ScenarioConfig& c) {
  PlannerParams p;
  p.g_min = c.planner.g_min;
  p.dphi = c.planner.delta_phi;
  p.hfov = c.sensor.hfov;
  p.r_max = c.sensor.r_max;
  p.interrupt_margin = c.planner.interrupt_margin;
  p.t_exit = c.planner.t_exit;
  return p;
}

GainParams gain_params(const ScenarioConfig& c) {
  GainParams g;
  g.h_max = c.planner.h_max;
  g.h_sensor = c.sensor.h_sensor;
  g.robot_height = c.robot.height;
  g.hfov = c.sensor.hfov;
  return g;
}

}  // namespace

const char* to_string(RunOutcome o) {
  switch (o) {
    case RunOutcome::Natural: return "natural";
    case RunOutcome::TimeLimit: return "time-limit";
  }
  return "?";
}

std::string format_metrics_csv(const std::vector<MetricsRow>& rows) {
  std::string out = "tick,sim_time_s,path_length_m,mapped_volume_m3,nodes,edges\n";
  char buf[160];
  for (const MetricsRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld,%.3f,%.6f,%.6f,%d,%d\n",
                  static_cast<long long>(r.tick), r.sim_time, r.path_length,
                  r.mapped_volume, r.nodes, r.edges);
    out += buf;
  }
  return out;
}

Simulation::Simulation(const ScenarioConfig& config, VoxelMap truth)
    : cfg_(config),
      truth_(std::move(truth)),
      map_(truth_.origin(), truth_.edge_length(), truth_.nx(), truth_.ny(),
           truth_.nz()),
      graph_(cfg_.mode, cfg_.planner.d_min, cfg_.planner.d_max),
      worker_(build_pollset(cfg_.sensor, cfg_.planner.delta_r,
                            cfg_.planner.delta_theta, cfg_.planner.delta_phi),
              gain_params(cfg_), cfg_.sim.gain_latency_ticks),
      planner_(planner_params(cfg_),
               max_window_gain(worker_.pollset(), cfg_.sensor.hfov), &log_),
      rng_(cfg_.seed) {
  if (const auto violations = validate_config(cfg_); !violations.empty())
    throw ConfigError("invalid scenario: " + violations.front());

  truth_grid_ = derive_grid(truth_, cfg_.robot.height, cfg_.robot.step_tolerance);
  if (!truth_grid_.traversable(cfg_.spawn))
    throw ConfigError("spawn not traversable");

  // The robot starts on ground it already knows (a real system carries this
  // in from its 2D SLAM layer). The seed disc must cover the sensor's ground
  // blind ring -- voxels below the vertical FoV cone are only observable from
  // at least blind_radius away -- or no steer check around the root could
  // ever pass.
  double blind_radius = cfg_.sensor.r_max;
  if (cfg_.sensor.vfov_min < 0.0) {
    const double drop = cfg_.sensor.h_sensor - 0.5 * map_.edge_length();
    blind_radius = std::min(blind_radius,
                            drop / std::tan(-cfg_.sensor.vfov_min));
  }
  seed_spawn_knowledge(truth_, map_, cfg_.spawn,
                       cfg_.robot.footprint.r_robot + blind_radius +
                           2.0 * map_.edge_length());
  grid_ = derive_grid(map_, cfg_.robot.height, cfg_.robot.step_tolerance);

  const double ground = truth_grid_.ground_height(truth_grid_.tile_of(cfg_.spawn));
  pos_ = {cfg_.spawn.x, cfg_.spawn.y, ground + cfg_.sensor.h_sensor};
  yaw_ = cfg_.spawn_yaw;

  const int root = graph_.init_root(pos_);
  paths_.rebuild(graph_, root);
  planner_.set_recalc_reference(pos_.xy());
  planner_.work().reorder(graph_, pos_.xy());
  planner_.work().enqueue(graph_, root);

  metrics_.push_back({0, 0.0, 0.0, map_.mapped_volume(),
                      static_cast<int>(graph_.node_count()),
                      static_cast<int>(graph_.edge_count())});
}

void Simulation::clear_route() {
  route_.clear();
  route_next_ = 0;
  aligning_final_yaw_ = false;
}

void Simulation::resolve_goal(GoalEvent event) {
  planner_.on_goal_event(graph_, event, tick_, pos_.xy());
  clear_route();
}

void Simulation::follow_ground() {
  const double h = truth_grid_.ground_height(truth_grid_.tile_of(pos_.xy()));
  if (std::isfinite(h)) pos_.z = h + cfg_.sensor.h_sensor;
}

/// One tick of turn-then-drive motion. Returns true on arrival at target.
bool Simulation::advance_toward(const Vec2d& target) {
  const Vec2d to = target - pos_.xy();
  const double dist = to.norm();
  if (dist <= kArriveEps) return true;

  const double bearing = std::atan2(to.y, to.x);
  const double err = wrap_angle(bearing - yaw_);
  const double dt = cfg_.sim.tick_seconds;
  if (std::abs(err) > kYawEps) {
    const double turn = std::min(std::abs(err), cfg_.robot.angular_speed * dt);
    yaw_ = wrap_angle(yaw_ + (err > 0 ? turn : -turn));
    return false;  // the rest of this tick is spent turning
  }
  const double step = std::min(dist, cfg_.robot.linear_speed * dt);
  pos_.x += (to.x / dist) * step;
  pos_.y += (to.y / dist) * step;
  path_length_ += step;
  follow_ground();
  return dist - step <= kArriveEps;
}

void Simulation::motion_phase() {
  if (!planner_.has_goal()) return;
  const int goal = planner_.active_goal();

  if (route_.empty()) {
    route_ = PathTable::path_to(graph_, goal);
    route_next_ = 0;
    aligning_final_yaw_ = false;
    if (route_.empty()) {  // disconnected from the anchor; cannot happen by
      resolve_goal(GoalEvent::Failed);  // construction, but fail safely
      return;
    }
  }

  if (aligning_final_yaw_) {
    // Face the middle of the best observation window before reporting the
    // goal reached; a full-circle sensor needs no alignment.
    const Node& g = graph_.node(goal);
    const double target_yaw =
        wrap_angle(g.best_yaw + 0.5 * cfg_.sensor.hfov);
    const double err = wrap_angle(target_yaw - yaw_);
    if (cfg_.sensor.hfov < kTwoPi - 1e-9 && std::abs(err) > kYawEps) {
      const double turn =
          std::min(std::abs(err), cfg_.robot.angular_speed * cfg_.sim.tick_seconds);
      yaw_ = wrap_angle(yaw_ + (err > 0 ? turn : -turn));
      return;
    }
    scan_due_ = true;
    resolve_goal(GoalEvent::Reached);
    return;
  }

  // The next waypoint must still look traversable on the evolving grid.
  const Node& wp = graph_.node(route_[route_next_]);
  if (!grid_.traversable(wp.position.xy())) {
    resolve_goal(GoalEvent::Failed);
    return;
  }

  if (advance_toward(wp.position.xy())) {
    pos_.x = wp.position.x;
    pos_.y = wp.position.y;
    follow_ground();
    scan_due_ = true;  // scan on arrival at each node
    if (route_next_ + 1 < route_.size()) {
      ++route_next_;
    } else {
      aligning_final_yaw_ = true;
    }
  }
}

void Simulation::do_scan() {
  simulate_scan(truth_, map_, pos_, yaw_, cfg_.sensor);
  grid_ = derive_grid(map_, cfg_.robot.height, cfg_.robot.step_tolerance);
}

void Simulation::scan_phase() {
  const double now = sim_time();
  if (scan_due_ || now - last_scan_time_ >= cfg_.sim.scan_interval - 1e-9) {
    do_scan();
    scan_due_ = false;
    last_scan_time_ = now;
  }
}

void Simulation::planning_phase() {
  bool goal_failed = false;
  if (worker_.deliver(graph_, planner_, tick_, goal_failed)) {
    planner_.resort(graph_, worker_.in_flight_node());
    if (goal_failed) resolve_goal(GoalEvent::Failed);
  }
  worker_.dispatch(graph_, planner_, map_, tick_);

  if (planner_.has_goal()) {
    if (planner_.maybe_interrupt(graph_, tick_, pos_.xy(),
                                 worker_.in_flight_node()))
      clear_route();
  } else {
    planner_.resort(graph_, worker_.in_flight_node());
    if (planner_.select_goal(graph_, tick_) >= 0) clear_route();
  }
}

void Simulation::try_expand(const Vec2d& candidate) {
  const ExpandOutcome out = graph_.expand(candidate, grid_, cfg_.robot.footprint);
  if (!out.added) return;
  paths_.insert_node(graph_, out.node_id);
  planner_.work().enqueue(graph_, out.node_id);
}

void Simulation::expansion_phase() {
  const SampleResult global = sample_point(grid_, rng_);
  if (global.accepted) try_expand(global.point);
  if (cfg_.local_sampling) {
    const SampleResult local =
        sample_point_local(grid_, pos_.xy(), cfg_.planner.r_ls, rng_);
    if (local.accepted) try_expand(local.point);
  }
}

void Simulation::anchor_phase() {
  if (paths_.track_anchor(graph_, pos_.xy())) {
    planner_.resort(graph_);
    planner_.work().reorder(graph_, pos_.xy());
  }
}

void Simulation::termination_phase() {
  const double t_end = static_cast<double>(tick_ + 1) * cfg_.sim.tick_seconds;
  planner_.update_exit_timer(worker_.in_flight(), t_end);
  if (planner_.should_terminate(t_end)) {
    outcome_ = RunOutcome::Natural;
    log_.note(tick_, "terminated");
  } else if (t_end >= cfg_.sim.time_limit - 1e-9) {
    outcome_ = RunOutcome::TimeLimit;
    log_.note(tick_, "time_limit");
  }
}

void Simulation::metrics_phase() {
  const std::int64_t t = tick_ + 1;
  if (!terminated() && t % cfg_.sim.metrics_interval_ticks != 0) return;
  metrics_.push_back({t, static_cast<double>(t) * cfg_.sim.tick_seconds,
                      path_length_, map_.mapped_volume(),
                      static_cast<int>(graph_.node_count()),
                      static_cast<int>(graph_.edge_count())});
}

bool Simulation::step() {
  if (terminated()) return false;
  motion_phase();
  scan_phase();
  planning_phase();
  expansion_phase();
  anchor_phase();
  termination_phase();
  metrics_phase();
  ++tick_;
  return !terminated();
}

RunResult Simulation::finish() {
  while (step()) {
  }
  RunResult r;
  r.outcome = *outcome_;
  r.duration = sim_time();
  r.path_length = path_length_;
  r.mapped_volume = map_.mapped_volume();
  r.nodes = static_cast<int>(graph_.node_count());
  r.edges = static_cast<int>(graph_.edge_count());
  r.series = metrics_;
  r.event_log = log_.text();
  r.graph_snapshot = graph_.snapshot();
  r.map_dump = dump_voxel_map(map_);
  return r;
}

RunResult run_to_completion(const ScenarioConfig& config) {
  VoxelMap truth = load_environment_file(config.environment_path);
  Simulation sim(config, std::move(truth));
  return sim.finish();
}

}  // namespace rne
