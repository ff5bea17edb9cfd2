#pragma once

#include "rne/geom.hpp"
#include "rne/voxel_map.hpp"

namespace rne {

struct SensorModel {
  double hfov = kTwoPi;      // horizontal field of view, rad, (0, 2pi]
  double vfov_min = -0.5;    // elevation bounds, rad, vfov_min < vfov_max
  double vfov_max = 0.5;
  double r_min = 0.3;        // m, blind range; bounds the gain poll lattice
  double r_max = 8.0;        // m
  double h_sensor = 0.5;     // m above ground
  int rays_azimuth = 180;    // scan lattice density
  int rays_elevation = 45;

  bool valid() const {
    return hfov > 0.0 && hfov <= kTwoPi + 1e-12 && vfov_min < vfov_max &&
           r_min < r_max && r_min >= 0.0 && rays_azimuth > 0 && rays_elevation > 0;
  }
};

struct ScanStats {
  std::int64_t newly_free = 0;
  std::int64_t newly_occupied = 0;
};

// Transfers visibility information from the ground truth into the robot map.
// Rays are cell-centered on a rays_azimuth x rays_elevation lattice across
// the FoV (azimuth centered on yaw) and marched at half a voxel edge. Cells
// before the first truth-Occupied voxel become Free, the hit voxel becomes
// Occupied, rays reaching r_max (or the map border) stop there.
ScanStats simulate_scan(const VoxelMap& truth, VoxelMap& robot_map,
                        const Vec3d& sensor_pos, double yaw,
                        const SensorModel& sensor);

/// Copies truth states into the robot map for every column within `radius`
/// of `pos` (full column height). Models the prior that the robot starts on
/// ground it already knows to be safe.
void seed_spawn_knowledge(const VoxelMap& truth, VoxelMap& robot_map,
                          const Vec2d& pos, double radius);

}  // namespace rne
