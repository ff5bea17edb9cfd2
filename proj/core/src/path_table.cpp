#include "rne/path_table.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace rne {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

void PathTable::run_dijkstra(RrgGraph& graph, const std::vector<int>& seeds) {
  // (distance, id) pairs; the id component makes tie order deterministic.
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int id : seeds) {
    heap.emplace(graph.node(id).d_xn, id);
    ++counters_.heap_pushes;
  }
  while (!heap.empty()) {
    const auto [dist, id] = heap.top();
    heap.pop();
    Node& n = graph.node(id);
    if (dist > n.d_xn) continue;  // stale entry
    ++counters_.heap_pops;
    for (int eid : n.edges) {
      const Edge& e = graph.edge(eid);
      Node& m = graph.node(e.other(id));
      ++counters_.edge_relaxations;
      const double cand = dist + e.length;
      if (cand < m.d_xn) {
        m.d_xn = cand;
        m.path_edge = eid;
        heap.emplace(cand, m.id);
        ++counters_.heap_pushes;
      }
    }
  }
}

void PathTable::rebuild(RrgGraph& graph, int anchor) {
  if (anchor < 0 || anchor >= static_cast<int>(graph.node_count()))
    throw std::out_of_range("path table anchor out of range");
  anchor_ = anchor;
  ++counters_.rebuilds;
  for (int id = 0; id < static_cast<int>(graph.node_count()); ++id) {
    Node& n = graph.node(id);
    n.d_xn = kInf;
    n.path_edge = -1;
  }
  graph.node(anchor).d_xn = 0.0;
  run_dijkstra(graph, {anchor});
}

void PathTable::insert_node(RrgGraph& graph, int node_id) {
  if (!has_anchor()) return;
  Node& n = graph.node(node_id);
  n.d_xn = kInf;
  n.path_edge = -1;
  ++counters_.inserts;
  for (int eid : n.edges) {
    const Edge& e = graph.edge(eid);
    const Node& nb = graph.node(e.other(node_id));
    const double cand = nb.d_xn + e.length;
    if (cand < n.d_xn) {
      n.d_xn = cand;
      n.path_edge = eid;
    }
  }
  if (!std::isfinite(n.d_xn)) return;  // all neighbors unreachable
  run_dijkstra(graph, {node_id});
}

bool PathTable::track_anchor(RrgGraph& graph, const Vec2d& robot_pos) {
  if (graph.node_count() == 0) return false;
  const int nearest = graph.nearest(robot_pos);
  if (nearest == anchor_) return false;
  rebuild(graph, nearest);
  return true;
}

std::vector<int> PathTable::path_to(const RrgGraph& graph, int target) {
  std::vector<int> path;
  if (target < 0 || target >= static_cast<int>(graph.node_count())) return path;
  const Node* n = &graph.node(target);
  if (!std::isfinite(n->d_xn)) return path;
  path.push_back(n->id);
  while (n->path_edge >= 0) {
    const Edge& e = graph.edge(n->path_edge);
    n = &graph.node(e.other(n->id));
    path.push_back(n->id);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace rne
