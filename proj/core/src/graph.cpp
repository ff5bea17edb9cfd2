#include "rne/graph.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rne {

const char* to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Initial: return "initial";
    case NodeStatus::GainPending: return "gain_pending";
    case NodeStatus::ActiveGoal: return "active_goal";
    case NodeStatus::Visited: return "visited";
    case NodeStatus::Explored: return "explored";
    case NodeStatus::Failed: return "failed";
  }
  return "?";
}

int RrgGraph::init_root(const Vec3d& x_pos) {
  const int id = add_node(x_pos);
  Node& root = nodes_[id];
  root.status = NodeStatus::Initial;
  root.d_xn = 0.0;
  return id;
}

int RrgGraph::add_node(const Vec3d& pos) {
  const int id = static_cast<int>(nodes_.size());
  Node n;
  n.id = id;
  n.position = pos;
  nodes_.push_back(std::move(n));
  index_.insert(pos.xy(), id);
  return id;
}

void RrgGraph::add_edge(int a, int b, double length) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({id, a, b, length});
  nodes_[a].edges.push_back(id);
  nodes_[b].edges.push_back(id);
}

ExpandOutcome RrgGraph::expand(const Vec2d& candidate, const GridMap2D& grid,
                               const RobotFootprint& fp) {
  ExpandOutcome out;
  const int near_id = nearest(candidate);
  const Vec2d near_pos = nodes_[near_id].position.xy();

  if (dist2d(candidate, near_pos) < d_min_ - 1e-9) {
    out.reason = ExpandRejected::Reason::TooClose;
    return out;
  }

  // Align to the tile lattice the steer function checks against, then fix
  // the distance to the nearest node.
  Vec2d pos = grid.center_of(grid.tile_of(candidate));
  double d = dist2d(pos, near_pos);
  if (d <= 0.0) {
    out.reason = ExpandRejected::Reason::TooClose;
    return out;
  }
  const Vec2d dir = (pos - near_pos) * (1.0 / d);
  if (mode_ == GraphMode::Tree) {
    pos = near_pos + dir * d_min_;  // fixed edge length
  } else if (d > d_max_) {
    pos = near_pos + dir * d_max_;
  }

  // The candidate moved; re-check the pairwise spacing against the whole
  // graph, not just the original nearest node.
  const int recheck = nearest(pos);
  if (dist2d(pos, nodes_[recheck].position.xy()) < d_min_ - 1e-9) {
    out.reason = ExpandRejected::Reason::TooClose;
    return out;
  }

  std::vector<int> neighbors;
  if (mode_ == GraphMode::Tree) {
    neighbors.push_back(near_id);
  } else {
    neighbors = nodes_in_radius(pos, d_max_ + 1e-9);
  }

  std::vector<int> connected;
  for (int nb : neighbors) {
    if (steer(grid, pos, nodes_[nb].position.xy(), fp)) connected.push_back(nb);
  }
  if (connected.empty()) {
    out.reason = ExpandRejected::Reason::NoConnection;
    return out;
  }

  // Provisional height: average of the connected neighbors; the gain
  // evaluation snaps it to the ground later.
  double z = 0.0;
  for (int nb : connected) z += nodes_[nb].position.z;
  z /= static_cast<double>(connected.size());

  const int id = add_node({pos.x, pos.y, z});
  for (int nb : connected)
    add_edge(id, nb, dist2d(pos, nodes_[nb].position.xy()));

  out.added = true;
  out.node_id = id;
  out.connected = std::move(connected);
  return out;
}

std::string RrgGraph::snapshot() const {
  std::ostringstream os;
  char buf[256];
  for (const Node& n : nodes_) {
    if (std::isinf(n.d_xn)) {
      std::snprintf(buf, sizeof(buf), "node %d %.6f %.6f %.6f %s %d %.6f inf\n",
                    n.id, n.position.x, n.position.y, n.position.z,
                    to_string(n.status), n.gain, n.best_yaw);
    } else {
      std::snprintf(buf, sizeof(buf), "node %d %.6f %.6f %.6f %s %d %.6f %.6f\n",
                    n.id, n.position.x, n.position.y, n.position.z,
                    to_string(n.status), n.gain, n.best_yaw, n.d_xn);
    }
    os << buf;
  }
  for (const Edge& e : edges_) {
    std::snprintf(buf, sizeof(buf), "edge %d %d %d %.6f\n", e.id, e.a, e.b, e.length);
    os << buf;
  }
  return os.str();
}

}  // namespace rne
