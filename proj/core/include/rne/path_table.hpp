#pragma once

#include <cstdint>
#include <vector>

#include "rne/graph.hpp"

namespace rne {

/// Cost weighting of a candidate: C(n) = exp(-d_xn). An unreachable node
/// (d_xn = inf) weighs zero.
inline double cost_from_distance(double d_xn) { return std::exp(-d_xn); }

struct PathOpCounters {
  std::int64_t rebuilds = 0;
  std::int64_t inserts = 0;
  std::int64_t heap_pushes = 0;
  std::int64_t heap_pops = 0;
  std::int64_t edge_relaxations = 0;
};

// Single-source shortest paths from the robot's anchor node over the graph's
// edges. Distances and predecessor edges live in the nodes themselves
// (Node::d_xn / Node::path_edge); this class owns the anchor bookkeeping and
// the update algorithms:
//   - full Dijkstra rebuild whenever the anchor changes,
//   - one-shot relaxation wave when a single node is appended.
class PathTable {
 public:
  int anchor() const { return anchor_; }
  bool has_anchor() const { return anchor_ >= 0; }

  /// Full Dijkstra from `anchor`. Invalidates nothing else.
  void rebuild(RrgGraph& graph, int anchor);

  /// Incremental update after `node_id` was appended with its edges already
  /// in place. Seeds the node from its best neighbor and relaxes outward;
  /// existing nodes only ever improve.
  void insert_node(RrgGraph& graph, int node_id);

  /// Re-anchors to the graph node nearest to the robot. Returns true (and
  /// rebuilds) when the anchor changed.
  bool track_anchor(RrgGraph& graph, const Vec2d& robot_pos);

  /// Node ids anchor -> target along predecessor edges; empty when target is
  /// unreachable or there is no anchor.
  static std::vector<int> path_to(const RrgGraph& graph, int target);

  const PathOpCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

 private:
  void run_dijkstra(RrgGraph& graph, const std::vector<int>& seeds);

  int anchor_ = -1;
  PathOpCounters counters_;
};

}  // namespace rne
