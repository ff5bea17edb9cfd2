#pragma once

#include <optional>
#include <vector>

#include "rne/graph.hpp"
#include "rne/pollset.hpp"
#include "rne/voxel_map.hpp"

namespace rne {

struct GainResult {
  int gain = kGainUnreachable;  ///< unknown polls in best window, -1 if unreachable
  double best_yaw = 0.0;        ///< start azimuth of the best window
  double z_snapped = 0.0;       ///< sensor height after ground snapping
  std::vector<int> bin_gains;   ///< unknown polls per azimuth bin

  bool reachable() const { return gain >= 0; }
};

struct GainParams {
  double h_max = 0.5;        ///< max |ground - expected| for snapping
  double h_sensor = 0.5;     ///< sensor height above ground
  double robot_height = 0.5; ///< clearance needed above ground
  double hfov = kTwoPi;      ///< sensor horizontal FoV (window width)
};

/// Finds standable ground in the column under `xy` whose height is within
/// h_max of (z_expected - h_sensor). Among candidates the closest wins, ties
/// to the lower one. Returns the snapped *sensor* height, or nullopt when no
/// such ground is observed (the node is unreachable).
std::optional<double> snap_to_ground(const VoxelMap& map, const Vec2d& xy,
                                     double z_expected,
                                     const GainParams& params);

/// Sparse Ray Polling around `origin`: each ray polls ascending ranges,
/// counts Unknown voxels and stops at the first Occupied one or at the map
/// boundary. The result is the best sliding azimuth window of width hfov.
GainResult evaluate_gain(const VoxelMap& map, const PollPointSet& set,
                         const Vec3d& origin, double hfov);

/// Poll points inside one sensor FoV window; the normalizer for g_min.
int max_window_gain(const PollPointSet& set, double hfov);

/// Width of the sliding window in azimuth bins, clamped to the bin count.
int window_bins(const PollPointSet& set, double hfov);

/// Status transition applied when a gain result lands on a node.
/// yaw_prev/was_visited describe the node before this evaluation.
NodeStatus status_after_gain(int gain, int g_max, double g_min,
                             bool was_visited, double yaw_prev, double yaw_new,
                             double dphi);

}  // namespace rne
