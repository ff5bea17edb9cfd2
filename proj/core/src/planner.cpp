#include "rne/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rne {

void EventLog::record(std::int64_t tick, const char* event, int node,
                      double gcr) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "tick %lld event %s node %d gcr %.6f",
                static_cast<long long>(tick), event, node, gcr);
  lines_.emplace_back(buf);
}

void EventLog::note(std::int64_t tick, const char* event) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "tick %lld event %s",
                static_cast<long long>(tick), event);
  lines_.emplace_back(buf);
}

std::string EventLog::text() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

const char* to_string(GoalEvent e) {
  switch (e) {
    case GoalEvent::Reached: return "goal_reached";
    case GoalEvent::Failed: return "goal_failed";
    case GoalEvent::Aborted: return "goal_aborted";
  }
  return "?";
}

double GainWorkQueue::key(const RrgGraph& graph, int id) const {
  return dist2d(graph.node(id).position.xy(), ref_pos_);
}

void GainWorkQueue::enqueue(const RrgGraph& graph, int node_id) {
  if (!members_.insert(node_id).second) return;
  const double k = key(graph, node_id);
  auto it = std::lower_bound(
      ids_.begin(), ids_.end(), node_id, [&](int lhs, int rhs) {
        const double kl = key(graph, lhs), kr = key(graph, rhs);
        if (kl != kr) return kl < kr;
        return lhs < rhs;
      });
  (void)k;
  ids_.insert(it, node_id);
}

int GainWorkQueue::pop() {
  const int id = ids_.front();
  ids_.erase(ids_.begin());
  members_.erase(id);
  return id;
}

void GainWorkQueue::reorder(const RrgGraph& graph, const Vec2d& robot_pos) {
  ref_pos_ = robot_pos;
  std::sort(ids_.begin(), ids_.end(), [&](int lhs, int rhs) {
    const double kl = key(graph, lhs), kr = key(graph, rhs);
    if (kl != kr) return kl < kr;
    return lhs < rhs;
  });
}

bool Planner::apply_gain_result(RrgGraph& graph, int node_id,
                                const GainResult& res, std::int64_t tick) {
  Node& n = graph.node(node_id);
  if (n.status == NodeStatus::Failed) return false;  // stays excluded

  const bool was_visited = n.status == NodeStatus::Visited;
  const double yaw_prev = n.best_yaw;
  const bool had_gain = n.has_gain();

  n.gain = res.gain;
  n.gain_stamp = tick;
  if (res.reachable()) {
    n.best_yaw = res.best_yaw;
    n.position.z = res.z_snapped;
  }

  const NodeStatus next =
      status_after_gain(res.gain, g_max_, params_.g_min, was_visited,
                        had_gain ? yaw_prev : res.best_yaw + kPi, res.best_yaw,
                        params_.dphi);

  if (n.status == NodeStatus::ActiveGoal) {
    if (next == NodeStatus::Failed) {
      // The goal's ground vanished from under it; give up on it now.
      n.status = NodeStatus::Failed;
      return true;
    }
    return false;  // keep pursuing; fresh gain only re-ranks the queue
  }
  n.status = next;
  return false;
}

void Planner::resort(RrgGraph& graph, int in_flight_node) {
  queue_.clear();
  for (int id = 0; id < static_cast<int>(graph.node_count()); ++id) {
    Node& n = graph.node(id);
    n.gcr = n.gain > 0 ? n.gain * cost_from_distance(n.d_xn) : 0.0;
    const bool candidate = n.status == NodeStatus::Initial ||
                           n.status == NodeStatus::Visited ||
                           n.status == NodeStatus::ActiveGoal;
    const bool stale = work_.contains(id) || id == in_flight_node;
    if (candidate && !stale && n.has_gain() && n.gain >= 0 &&
        std::isfinite(n.d_xn))
      queue_.push_back(id);
  }
  std::sort(queue_.begin(), queue_.end(), [&](int lhs, int rhs) {
    const Node& a = graph.node(lhs);
    const Node& b = graph.node(rhs);
    if (a.gcr != b.gcr) return a.gcr > b.gcr;
    if (a.d_xn != b.d_xn) return a.d_xn < b.d_xn;
    return lhs < rhs;
  });
}

int Planner::select_goal(RrgGraph& graph, std::int64_t tick) {
  if (goal_ >= 0) throw std::logic_error("goal already active");
  if (queue_.empty()) return -1;
  goal_ = queue_.front();
  Node& n = graph.node(goal_);
  n.status = NodeStatus::ActiveGoal;
  if (log_) log_->record(tick, "goal_selected", goal_, n.gcr);
  return goal_;
}

bool Planner::maybe_interrupt(RrgGraph& graph, std::int64_t tick,
                              const Vec2d& robot_pos, int in_flight_node) {
  if (goal_ < 0) return false;
  if (queue_.empty()) return false;
  const int head = queue_.front();
  if (head == goal_) return false;
  const Node& h = graph.node(head);
  const Node& g = graph.node(goal_);
  // Relative hysteresis: with margin 0 any strictly better head interrupts;
  // a positive margin requires a (1+margin)x advantage, damping the goal
  // ping-pong that pure greedy switching produces when two distant
  // candidates' GCRs alternate as the path anchor hops between nodes.
  if (h.gcr <= g.gcr * (1.0 + params_.interrupt_margin)) return false;
  on_goal_event(graph, GoalEvent::Aborted, tick, robot_pos);
  resort(graph, in_flight_node);
  select_goal(graph, tick);
  return true;
}

void Planner::enqueue_recalc(RrgGraph& graph, int goal_node,
                             const Vec2d& robot_pos) {
  std::vector<int> ids = graph.nodes_in_radius(robot_pos, 2.0 * params_.r_max);
  if (goal_node >= 0 &&
      std::find(ids.begin(), ids.end(), goal_node) == ids.end())
    ids.push_back(goal_node);
  for (int id : ids) {
    if (graph.node(id).status == NodeStatus::Failed) continue;
    work_.enqueue(graph, id);
  }
}

bool Planner::on_goal_event(RrgGraph& graph, GoalEvent event,
                            std::int64_t tick, const Vec2d& robot_pos) {
  if (goal_ < 0)
    throw std::logic_error("goal event without an active goal");
  const int id = goal_;
  goal_ = -1;
  Node& n = graph.node(id);
  switch (event) {
    case GoalEvent::Reached: n.status = NodeStatus::Visited; break;
    case GoalEvent::Failed: n.status = NodeStatus::Failed; break;
    case GoalEvent::Aborted: n.status = NodeStatus::Initial; break;
  }
  if (log_) log_->record(tick, to_string(event), id, n.gcr);

  const bool moved = dist2d(robot_pos, recalc_ref_) > 1e-9;
  if (!moved) {
    // Map unchanged away from the robot; only a reached-in-place goal needs
    // a fresh result, or its stale gain would keep it at the queue head.
    if (event == GoalEvent::Reached) work_.enqueue(graph, id);
    return false;
  }
  enqueue_recalc(graph, id, robot_pos);
  work_.reorder(graph, robot_pos);
  recalc_ref_ = robot_pos;
  return true;
}

void Planner::update_exit_timer(bool gain_in_flight, double sim_time) {
  const bool idle =
      queue_.empty() && goal_ < 0 && work_.empty() && !gain_in_flight;
  if (!idle) {
    armed_since_ = -1.0;
    return;
  }
  if (armed_since_ < 0.0) armed_since_ = sim_time;
}

bool Planner::should_terminate(double sim_time) const {
  return exit_timer_armed() &&
         sim_time - armed_since_ >= params_.t_exit - 1e-9;
}

}  // namespace rne
