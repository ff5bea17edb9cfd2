#include "rne/gain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rne/grid_map.hpp"

namespace rne {

std::optional<double> snap_to_ground(const VoxelMap& map, const Vec2d& xy,
                                     double z_expected,
                                     const GainParams& params) {
  const VoxelIndex col =
      map.index_of({xy.x, xy.y, map.origin().z + 0.5 * map.edge_length()});
  if (col.x < 0 || col.x >= map.nx() || col.y < 0 || col.y >= map.ny())
    return std::nullopt;

  const double target = z_expected - params.h_sensor;
  double best_h = 0.0, best_diff = std::numeric_limits<double>::infinity();
  int top = map.nz() - 1;
  while (top >= 0) {
    const int gz =
        find_standable_ground(map, col.x, col.y, top, params.robot_height);
    if (gz < 0) break;
    const double h = map.origin().z + (gz + 1) * map.edge_length();
    const double diff = std::abs(h - target);
    // Scanning top-down, so on a tie the later (lower) candidate wins.
    if (diff <= params.h_max + 1e-9 && diff <= best_diff + 1e-12) {
      best_diff = diff;
      best_h = h;
    }
    top = gz - 1;
  }
  if (!std::isfinite(best_diff)) return std::nullopt;
  return best_h + params.h_sensor;
}

int window_bins(const PollPointSet& set, double hfov) {
  int w = static_cast<int>(std::round(hfov / set.dphi));
  return std::clamp(w, 1, set.k_count);
}

int max_window_gain(const PollPointSet& set, double hfov) {
  return window_bins(set, hfov) * set.range_bins() * set.elevation_bins();
}

GainResult evaluate_gain(const VoxelMap& map, const PollPointSet& set,
                         const Vec3d& origin, double hfov) {
  GainResult res;
  res.z_snapped = origin.z;
  res.bin_gains.assign(set.k_count, 0);

  const int per_ray = set.range_bins();
  std::size_t idx = 0;
  for (int k = 0; k < set.k_count; ++k) {
    int bin = 0;
    for (int j = set.j_min; j <= set.j_max; ++j) {
      for (int i = 0; i < per_ray; ++i) {
        const Vec3d p = origin + set.offsets[idx + i];
        if (!map.contains(p)) break;  // leaving the world ends this ray
        const VoxelState s = map.state(p);
        if (s == VoxelState::Occupied) break;
        if (s == VoxelState::Unknown) ++bin;
      }
      idx += per_ray;
    }
    res.bin_gains[k] = bin;
  }

  // Best sliding window of the sensor's horizontal FoV over the azimuth
  // bins (circular). Ties keep the smallest start bin.
  const int w = window_bins(set, hfov);
  int sum = 0;
  for (int k = 0; k < w; ++k) sum += res.bin_gains[k];
  int best_sum = sum, best_k = 0;
  for (int k = 1; k < set.k_count; ++k) {
    sum -= res.bin_gains[k - 1];
    sum += res.bin_gains[(k + w - 1) % set.k_count];
    if (sum > best_sum) {
      best_sum = sum;
      best_k = k;
    }
  }
  res.gain = best_sum;
  res.best_yaw = wrap_angle(set.azimuth_of_bin(best_k));
  return res;
}

NodeStatus status_after_gain(int gain, int g_max, double g_min,
                             bool was_visited, double yaw_prev, double yaw_new,
                             double dphi) {
  if (gain < 0) return NodeStatus::Failed;
  const double ratio = g_max > 0 ? static_cast<double>(gain) / g_max : 0.0;
  if (ratio < g_min) return NodeStatus::Explored;
  if (was_visited && std::abs(angle_diff(yaw_new, yaw_prev)) <= dphi + 1e-9)
    return NodeStatus::Explored;
  return NodeStatus::Initial;
}

}  // namespace rne
