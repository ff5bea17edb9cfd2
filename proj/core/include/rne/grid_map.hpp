#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rne/geom.hpp"
#include "rne/voxel_map.hpp"

namespace rne {

enum class TileState : std::uint8_t { Unknown = 0, Traversable = 1, Obstacle = 2 };

struct TileIndex {
  int x = 0;
  int y = 0;
  bool operator==(const TileIndex&) const = default;
};

// 2D traversability grid derived from a voxel map snapshot. Resolution equals
// the voxel edge length and the tile lattice is aligned with the voxel
// columns.
class GridMap2D {
 public:
  GridMap2D() = default;
  GridMap2D(Vec2d origin, double resolution, int nx, int ny);

  const Vec2d& origin() const { return origin_; }
  double resolution() const { return res_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  bool in_bounds(const TileIndex& t) const {
    return t.x >= 0 && t.x < nx_ && t.y >= 0 && t.y < ny_;
  }

  TileIndex tile_of(const Vec2d& p) const {
    return {static_cast<int>(std::floor((p.x - origin_.x) / res_)),
            static_cast<int>(std::floor((p.y - origin_.y) / res_))};
  }

  Vec2d center_of(const TileIndex& t) const {
    return {origin_.x + (t.x + 0.5) * res_, origin_.y + (t.y + 0.5) * res_};
  }

  /// Out-of-bounds tiles read Unknown.
  TileState state(const TileIndex& t) const {
    return in_bounds(t) ? tiles_[flat(t)] : TileState::Unknown;
  }
  TileState state(const Vec2d& p) const { return state(tile_of(p)); }

  bool traversable(const Vec2d& p) const { return state(p) == TileState::Traversable; }

  void set(const TileIndex& t, TileState s) { tiles_[flat(t)] = s; }

  /// Ground height (top of the supporting voxel) for tiles that have one;
  /// NaN otherwise.
  double ground_height(const TileIndex& t) const {
    return in_bounds(t) ? ground_[flat(t)] : std::numeric_limits<double>::quiet_NaN();
  }
  void set_ground_height(const TileIndex& t, double h) { ground_[flat(t)] = h; }

  bool has_known_tiles() const { return known_count_ > 0; }
  std::int64_t known_count() const { return known_count_; }

  /// Bounding rectangle (world coords, [min, max)) of all non-Unknown tiles.
  /// Only meaningful when has_known_tiles().
  Vec2d known_min() const { return known_min_; }
  Vec2d known_max() const { return known_max_; }

  /// Recomputes the known-tile counters and bounding rectangle.
  void finalize();

 private:
  std::size_t flat(const TileIndex& t) const {
    return static_cast<std::size_t>(t.y) * nx_ + t.x;
  }

  Vec2d origin_;
  double res_ = 0.1;
  int nx_ = 0, ny_ = 0;
  std::vector<TileState> tiles_;
  std::vector<double> ground_;
  std::int64_t known_count_ = 0;
  Vec2d known_min_, known_max_;
};

// Column rule: the supporting ground of a column is the topmost Occupied
// voxel with a fully observed Free clearance band of at least robot_height
// above it (band must lie inside the map). A tile is Traversable when such
// ground exists and no 4-neighbor ground differs by more than step_tolerance;
// it is Obstacle when the column is fully observed but not standable (wall,
// pit) or at a ledge line; it is Unknown while observations are missing.
GridMap2D derive_grid(const VoxelMap& map, double robot_height, double step_tolerance);

/// Ground search used by both derive_grid and the gain module's height snap:
/// topmost Occupied voxel in the column at or below z_top_index whose
/// clearance band is observed Free. Returns the voxel z index or -1.
int find_standable_ground(const VoxelMap& map, int ix, int iy, int z_top_index,
                          double robot_height);

}  // namespace rne
