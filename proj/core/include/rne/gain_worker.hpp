#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "rne/gain.hpp"
#include "rne/graph.hpp"
#include "rne/planner.hpp"
#include "rne/pollset.hpp"
#include "rne/voxel_map.hpp"

namespace rne {

// Gain evaluation decoupled from planning, modeled as a pipelined mailbox: at
// most one job starts per tick, each is computed against the map at its
// dispatch time, and its result is delivered latency ticks later. Results
// therefore keep streaming one tick apart even when every evaluation is slow,
// and goal selection runs on whatever has already landed. With no OS threads
// the schedule is part of the simulation state and replays bit-identically.
class GainWorker {
 public:
  GainWorker(PollPointSet set, GainParams params, int latency_ticks)
      : set_(std::move(set)),
        params_(params),
        latency_(latency_ticks < 1 ? 1 : latency_ticks) {}

  const PollPointSet& pollset() const { return set_; }
  const GainParams& params() const { return params_; }
  int latency() const { return latency_; }

  bool in_flight() const { return !jobs_.empty(); }
  bool in_flight(int node_id) const;
  /// Nodes with a result under way, oldest job first.
  std::vector<int> in_flight_nodes() const;

  /// Computes one evaluation immediately (ground snap + ray polling) without
  /// scheduling. Used for the worker itself and for tests/oracles.
  GainResult evaluate(const RrgGraph& graph, const VoxelMap& map,
                      int node_id) const;

  /// Lands every result due at `tick` on its node via the planner, in
  /// dispatch order. Returns true when at least one was applied (caller then
  /// resorts the queue). `goal_failed` reports an active goal whose ground
  /// vanished.
  bool deliver(RrgGraph& graph, Planner& planner, std::int64_t tick,
               bool& goal_failed);

  /// Starts at most one job per call: the nearest pending node from the
  /// planner's work queue. A node already in flight is not dispatched again
  /// (its fresh enqueue waits for the current result to land first), keeping
  /// at most one evaluation in flight per node.
  void dispatch(const RrgGraph& graph, Planner& planner, const VoxelMap& map,
                std::int64_t tick);

 private:
  struct Job {
    int node = -1;
    std::int64_t due = 0;
    GainResult result;
  };

  PollPointSet set_;
  GainParams params_;
  int latency_;
  std::deque<Job> jobs_;  // FIFO; constant latency keeps due times sorted
};

}  // namespace rne
