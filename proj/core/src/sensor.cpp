#include "rne/sensor.hpp"

#include <cmath>

namespace rne {

ScanStats simulate_scan(const VoxelMap& truth, VoxelMap& robot_map,
                        const Vec3d& sensor_pos, double yaw,
                        const SensorModel& sensor) {
  ScanStats stats;
  const double step = truth.edge_length() * 0.5;
  const double az_step = sensor.hfov / sensor.rays_azimuth;
  const double el_step = (sensor.vfov_max - sensor.vfov_min) / sensor.rays_elevation;

  for (int a = 0; a < sensor.rays_azimuth; ++a) {
    const double az = yaw - sensor.hfov * 0.5 + (a + 0.5) * az_step;
    const double cos_az = std::cos(az), sin_az = std::sin(az);
    for (int e = 0; e < sensor.rays_elevation; ++e) {
      const double el = sensor.vfov_min + (e + 0.5) * el_step;
      const Vec3d dir{std::cos(el) * cos_az, std::cos(el) * sin_az, std::sin(el)};

      VoxelIndex prev{-1, -1, -1};
      bool first = true;
      for (double t = 0.0; t <= sensor.r_max; t += step) {
        const Vec3d p = sensor_pos + dir * t;
        const VoxelIndex idx = truth.index_of(p);
        if (!truth.in_bounds(idx)) break;  // clipped; a leaving ray cannot re-enter
        if (!first && idx == prev) continue;
        first = false;
        prev = idx;
        if (truth.state(idx) == VoxelState::Occupied) {
          if (robot_map.observe(idx, VoxelState::Occupied)) ++stats.newly_occupied;
          break;
        }
        if (robot_map.observe(idx, VoxelState::Free)) ++stats.newly_free;
      }
    }
  }
  return stats;
}

void seed_spawn_knowledge(const VoxelMap& truth, VoxelMap& robot_map,
                          const Vec2d& pos, double radius) {
  const double e = truth.edge_length();
  const VoxelIndex c = truth.index_of({pos.x, pos.y, truth.origin().z});
  const int r_tiles = static_cast<int>(std::ceil(radius / e)) + 1;
  for (int dy = -r_tiles; dy <= r_tiles; ++dy) {
    for (int dx = -r_tiles; dx <= r_tiles; ++dx) {
      const int ix = c.x + dx, iy = c.y + dy;
      const Vec3d center = truth.center_of({ix, iy, 0});
      const double ddx = center.x - pos.x, ddy = center.y - pos.y;
      if (ddx * ddx + ddy * ddy > radius * radius) continue;
      for (int iz = 0; iz < truth.nz(); ++iz) {
        const VoxelIndex idx{ix, iy, iz};
        if (!truth.in_bounds(idx)) continue;
        robot_map.observe(idx, truth.state(idx));
      }
    }
  }
}

}  // namespace rne
