#include "rne/gain_worker.hpp"

namespace rne {

GainResult GainWorker::evaluate(const RrgGraph& graph, const VoxelMap& map,
                                int node_id) const {
  const Node& n = graph.node(node_id);

  // Expected sensor height: mean of the connected nodes' current heights;
  // the root (no edges) uses its own spawn height.
  double z_expected = n.position.z;
  if (!n.edges.empty()) {
    double sum = 0.0;
    for (int eid : n.edges) sum += graph.node(graph.edge(eid).other(n.id)).position.z;
    z_expected = sum / static_cast<double>(n.edges.size());
  }

  GainResult res;
  const auto z = snap_to_ground(map, n.position.xy(), z_expected, params_);
  if (!z) {
    res.gain = kGainUnreachable;
    res.z_snapped = n.position.z;
    return res;
  }
  res = evaluate_gain(map, set_, {n.position.x, n.position.y, *z}, params_.hfov);
  res.z_snapped = *z;
  return res;
}

bool GainWorker::in_flight(int node_id) const {
  for (const Job& j : jobs_)
    if (j.node == node_id) return true;
  return false;
}

std::vector<int> GainWorker::in_flight_nodes() const {
  std::vector<int> ids;
  ids.reserve(jobs_.size());
  for (const Job& j : jobs_) ids.push_back(j.node);
  return ids;
}

bool GainWorker::deliver(RrgGraph& graph, Planner& planner, std::int64_t tick,
                         bool& goal_failed) {
  goal_failed = false;
  bool applied = false;
  while (!jobs_.empty() && tick >= jobs_.front().due) {
    const Job job = jobs_.front();
    jobs_.pop_front();
    goal_failed |= planner.apply_gain_result(graph, job.node, job.result, tick);
    applied = true;
  }
  return applied;
}

void GainWorker::dispatch(const RrgGraph& graph, Planner& planner,
                          const VoxelMap& map, std::int64_t tick) {
  if (planner.work().empty() || in_flight(planner.work().head())) return;
  Job job;
  job.node = planner.work().pop();
  job.due = tick + latency_;
  job.result = evaluate(graph, map, job.node);
  jobs_.push_back(job);
}

}  // namespace rne
