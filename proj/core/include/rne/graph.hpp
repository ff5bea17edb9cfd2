#pragma once

#include <string>
#include <vector>

#include "rne/geom.hpp"
#include "rne/grid_map.hpp"
#include "rne/kd_tree.hpp"
#include "rne/steer.hpp"

namespace rne {

enum class NodeStatus : std::uint8_t {
  Initial,      // gain known, candidate for selection
  GainPending,  // added to the graph, first gain evaluation not finished
  ActiveGoal,   // current navigation goal
  Visited,      // a goal that was reached
  Explored,     // not worth exploring (gain below threshold or stuck rule)
  Failed,       // unreachable ground or navigation failure; never selected again
};

const char* to_string(NodeStatus s);

constexpr int kGainUnset = -2;
constexpr int kGainUnreachable = -1;

struct Node {
  int id = -1;
  Vec3d position;          // z at sensor height
  NodeStatus status = NodeStatus::GainPending;
  int gain = kGainUnset;   // expected new-voxel count; -1 = unreachable ground
  double best_yaw = 0.0;   // start of the best azimuth window
  double gcr = 0.0;        // gain * exp(-d_xn)
  double d_xn = std::numeric_limits<double>::infinity();
  int path_edge = -1;      // predecessor edge on the path from the anchor
  std::int64_t gain_stamp = -1;  // tick of the last finished gain evaluation
  std::vector<int> edges;

  bool has_gain() const { return gain_stamp >= 0; }
};

struct Edge {
  int id = -1;
  int a = -1;
  int b = -1;
  double length = 0.0;

  int other(int n) const { return n == a ? b : a; }
};

enum class GraphMode { Graph, Tree };

struct ExpandRejected {
  enum class Reason { TooClose, NoConnection } reason;
};

struct ExpandOutcome {
  bool added = false;
  ExpandRejected::Reason reason = ExpandRejected::Reason::TooClose;
  int node_id = -1;
  std::vector<int> connected;  // N_c, ids of the nodes the new node linked to
};

// The continuously-built exploration graph. Nodes are added only with at
// least one steerable connection, so reachability from the root holds by
// construction. In Tree mode a new node connects to its nearest neighbor
// only, at a fixed distance of d_min.
class RrgGraph {
 public:
  RrgGraph(GraphMode mode, double d_min, double d_max)
      : mode_(mode), d_min_(d_min), d_max_(d_max) {}

  /// Creates the root node at the robot position. Returns its id (0).
  int init_root(const Vec3d& x_pos);

  GraphMode mode() const { return mode_; }
  double d_min() const { return d_min_; }
  double d_max() const { return d_max_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  Node& node(int id) { return nodes_[id]; }
  const Node& node(int id) const { return nodes_[id]; }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Nearest node to a planar point (-1 when empty).
  int nearest(const Vec2d& p) const { return index_.nearest(p); }

  /// Node ids within radius r of a planar point, ascending.
  std::vector<int> nodes_in_radius(const Vec2d& p, double r) const {
    return index_.radius(p, r);
  }

  // One expansion attempt for an accepted sample: locate the nearest node,
  // enforce the d_min spacing, snap the candidate to its grid tile center,
  // pull it onto the segment at d_max (Graph) or place it at exactly d_min
  // (Tree), then steer to the connectable neighbors. The node is added only
  // if at least one connection passes.
  ExpandOutcome expand(const Vec2d& candidate, const GridMap2D& grid,
                       const RobotFootprint& fp);

  /// Line-oriented snapshot (node/edge records) for run artifacts.
  std::string snapshot() const;

 private:
  int add_node(const Vec3d& pos);
  void add_edge(int a, int b, double length);

  GraphMode mode_;
  double d_min_;
  double d_max_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  KdTree2D index_;
};

}  // namespace rne
