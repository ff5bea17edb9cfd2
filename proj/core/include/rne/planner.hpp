#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rne/gain.hpp"
#include "rne/graph.hpp"
#include "rne/path_table.hpp"

namespace rne {

/// Append-only, machine-parseable record of planner decisions.
class EventLog {
 public:
  void record(std::int64_t tick, const char* event, int node, double gcr);
  void note(std::int64_t tick, const char* event);

  const std::vector<std::string>& lines() const { return lines_; }
  std::string text() const;

 private:
  std::vector<std::string> lines_;
};

/// Pending gain (re-)evaluations, deduplicated, ordered ascending by straight
/// line distance to the robot position captured at the last reorder. Ties
/// break on node id.
class GainWorkQueue {
 public:
  void enqueue(const RrgGraph& graph, int node_id);
  int pop();
  /// Next node to evaluate. Pre: !empty().
  int head() const { return ids_.front(); }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(int node_id) const { return members_.count(node_id) > 0; }

  /// Re-sorts all pending work against a new robot position.
  void reorder(const RrgGraph& graph, const Vec2d& robot_pos);

 private:
  double key(const RrgGraph& graph, int id) const;

  std::vector<int> ids_;  // sorted by (distance to ref_pos_, id)
  std::unordered_set<int> members_;
  Vec2d ref_pos_;
};

enum class GoalEvent { Reached, Failed, Aborted };
const char* to_string(GoalEvent e);

struct PlannerParams {
  double g_min = 0.05;           ///< gain ratio below which a node is Explored
  double dphi = deg_to_rad(10);  ///< azimuth bin, the stuck-rule yaw tolerance
  double hfov = kTwoPi;          ///< sensor horizontal FoV
  double r_max = 5.0;            ///< sensor range; recalc radius is 2*r_max
  double interrupt_margin = 0.0; ///< head must beat the goal's GCR by this
  double t_exit = 10.0;          ///< seconds the exit timer must stay armed
};

// Decoupled goal selection over the exploration graph. Keeps the candidate
// queue (nodes ordered by GCR = gain * exp(-d_xn)), the active goal, the gain
// work queue feeding the evaluator, and the exit timer that ends exploration
// once nothing is left to do.
class Planner {
 public:
  Planner(const PlannerParams& params, int g_max, EventLog* log)
      : params_(params), g_max_(g_max), log_(log) {}

  const PlannerParams& params() const { return params_; }
  int g_max() const { return g_max_; }

  // --- gain work feed ------------------------------------------------------
  GainWorkQueue& work() { return work_; }
  const GainWorkQueue& work() const { return work_; }

  /// Lands a finished evaluation on its node: position height, gain, yaw,
  /// stamp, and the status transition. A Failed node stays Failed; the active
  /// goal keeps its status unless the result says unreachable, which fails
  /// the goal on the spot. Returns true when the active goal just failed.
  bool apply_gain_result(RrgGraph& graph, int node_id, const GainResult& res,
                         std::int64_t tick);

  // --- candidate queue -----------------------------------------------------
  /// Recomputes GCR for all evaluated candidates and rebuilds the ranking
  /// (GCR desc, then d_xn asc, then id). Call after gain results land or
  /// path distances change. Nodes whose re-evaluation is pending or in
  /// flight (`in_flight`) are left out: their gcr is known to be stale, and
  /// selecting a just-reached goal from its stale gain would loop forever.
  /// They re-enter as soon as the fresh result lands.
  void resort(RrgGraph& graph, const std::vector<int>& in_flight = {});

  const std::vector<int>& queue() const { return queue_; }
  bool queue_empty() const { return queue_.empty(); }

  // --- goal lifecycle ------------------------------------------------------
  int active_goal() const { return goal_; }
  bool has_goal() const { return goal_ >= 0; }

  /// Picks the queue head as the next goal. Returns the node id or -1 when
  /// the queue is empty.
  int select_goal(RrgGraph& graph, std::int64_t tick);

  /// While a goal is active: if the current queue head (excluding the goal)
  /// has strictly higher GCR plus the margin, aborts the goal and selects the
  /// head. Returns true when the goal switched.
  bool maybe_interrupt(RrgGraph& graph, std::int64_t tick, const Vec2d& robot_pos,
                       const std::vector<int>& in_flight = {});

  /// Resolves the active goal (reached / failed / aborted) and logs the
  /// event. When the robot moved since the last recalculation, enqueues gain
  /// re-evaluation for the goal node and every node within 2*r_max of the
  /// robot and takes the new position as the recalculation reference. A goal
  /// reached without displacement still re-enqueues itself: the arrival scan
  /// can change the map under it, and without a fresh result a stale
  /// high-gain node would be reselected forever. Returns true when the full
  /// recalculation ball was enqueued.
  /// Throws std::logic_error when no goal is active.
  bool on_goal_event(RrgGraph& graph, GoalEvent event, std::int64_t tick,
                     const Vec2d& robot_pos);

  /// Seeds the "robot moved since last recalculation" reference (spawn).
  void set_recalc_reference(const Vec2d& pos) { recalc_ref_ = pos; }

  // --- exit timer ----------------------------------------------------------
  /// Arms the timer iff the candidate queue is empty, no goal is active and
  /// no gain work is pending or in flight. Disarms it otherwise.
  void update_exit_timer(bool gain_in_flight, double sim_time);
  bool exit_timer_armed() const { return armed_since_ >= 0.0; }
  double exit_timer_armed_since() const { return armed_since_; }

  /// True when the timer has been continuously armed for at least t_exit.
  bool should_terminate(double sim_time) const;

 private:
  void enqueue_recalc(RrgGraph& graph, int goal_node, const Vec2d& robot_pos);

  PlannerParams params_;
  int g_max_;
  EventLog* log_;
  GainWorkQueue work_;
  std::vector<int> queue_;
  int goal_ = -1;
  double armed_since_ = -1.0;
  Vec2d recalc_ref_;
};

}  // namespace rne
