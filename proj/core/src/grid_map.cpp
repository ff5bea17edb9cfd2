#include "rne/grid_map.hpp"

#include <cmath>

namespace rne {

GridMap2D::GridMap2D(Vec2d origin, double resolution, int nx, int ny)
    : origin_(origin), res_(resolution), nx_(nx), ny_(ny),
      tiles_(static_cast<std::size_t>(nx) * ny, TileState::Unknown),
      ground_(static_cast<std::size_t>(nx) * ny,
              std::numeric_limits<double>::quiet_NaN()) {}

void GridMap2D::finalize() {
  known_count_ = 0;
  int min_x = nx_, max_x = -1, min_y = ny_, max_y = -1;
  for (int y = 0; y < ny_; ++y) {
    for (int x = 0; x < nx_; ++x) {
      if (tiles_[flat({x, y})] == TileState::Unknown) continue;
      ++known_count_;
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (known_count_ > 0) {
    known_min_ = {origin_.x + min_x * res_, origin_.y + min_y * res_};
    known_max_ = {origin_.x + (max_x + 1) * res_, origin_.y + (max_y + 1) * res_};
  }
}

namespace {

int clearance_voxels(double robot_height, double edge) {
  return static_cast<int>(std::ceil(robot_height / edge - 1e-9));
}

}  // namespace

int find_standable_ground(const VoxelMap& map, int ix, int iy, int z_top_index,
                          double robot_height) {
  const int band = clearance_voxels(robot_height, map.edge_length());
  const int top = std::min(z_top_index, map.nz() - 1);
  for (int iz = top; iz >= 0; --iz) {
    if (map.state(VoxelIndex{ix, iy, iz}) != VoxelState::Occupied) continue;
    if (iz + band >= map.nz()) continue;  // band would leave the map
    bool clear = true;
    for (int k = iz + 1; k <= iz + band; ++k) {
      if (map.state(VoxelIndex{ix, iy, k}) != VoxelState::Free) {
        clear = false;
        break;
      }
    }
    if (clear) return iz;
  }
  return -1;
}

GridMap2D derive_grid(const VoxelMap& map, double robot_height, double step_tolerance) {
  GridMap2D grid({map.origin().x, map.origin().y}, map.edge_length(), map.nx(),
                 map.ny());

  // Pass 1: per-column ground search.
  for (int y = 0; y < map.ny(); ++y) {
    for (int x = 0; x < map.nx(); ++x) {
      const int gz = find_standable_ground(map, x, y, map.nz() - 1, robot_height);
      if (gz >= 0) {
        grid.set({x, y}, TileState::Traversable);
        grid.set_ground_height({x, y}, map.origin().z + (gz + 1) * map.edge_length());
        continue;
      }
      bool any_unknown = false;
      for (int iz = 0; iz < map.nz(); ++iz) {
        if (map.state(VoxelIndex{x, y, iz}) == VoxelState::Unknown) {
          any_unknown = true;
          break;
        }
      }
      grid.set({x, y}, any_unknown ? TileState::Unknown : TileState::Obstacle);
    }
  }

  // Pass 2: ledge check against 4-neighbor ground heights.
  static const int kDx[4] = {1, -1, 0, 0};
  static const int kDy[4] = {0, 0, 1, -1};
  std::vector<TileIndex> ledges;
  for (int y = 0; y < map.ny(); ++y) {
    for (int x = 0; x < map.nx(); ++x) {
      if (grid.state(TileIndex{x, y}) != TileState::Traversable) continue;
      const double h = grid.ground_height({x, y});
      for (int d = 0; d < 4; ++d) {
        const TileIndex nb{x + kDx[d], y + kDy[d]};
        if (!grid.in_bounds(nb)) continue;
        const double hn = grid.ground_height(nb);
        if (std::isnan(hn)) continue;
        if (std::abs(h - hn) > step_tolerance + 1e-9) {
          ledges.push_back({x, y});
          break;
        }
      }
    }
  }
  for (const TileIndex& t : ledges) grid.set(t, TileState::Obstacle);

  grid.finalize();
  return grid;
}

}  // namespace rne
