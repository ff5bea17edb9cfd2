#pragma once

#include <cstdint>
#include <vector>

#include "rne/geom.hpp"

namespace rne {

enum class VoxelState : std::uint8_t { Unknown = 0, Free = 1, Occupied = 2 };

struct VoxelIndex {
  int x = 0;
  int y = 0;
  int z = 0;
  bool operator==(const VoxelIndex&) const = default;
};

// Dense ternary occupancy grid. Doubles as the ground-truth world (fully
// known) and as the robot's evolving map (starts all Unknown, updated by
// simulated scans). World queries outside the bounding box read Unknown.
class VoxelMap {
 public:
  VoxelMap() = default;
  VoxelMap(Vec3d origin, double edge_length, int nx, int ny, int nz,
           VoxelState fill = VoxelState::Unknown);

  const Vec3d& origin() const { return origin_; }
  double edge_length() const { return edge_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  std::size_t size() const { return cells_.size(); }

  bool in_bounds(const VoxelIndex& i) const {
    return i.x >= 0 && i.x < nx_ && i.y >= 0 && i.y < ny_ && i.z >= 0 && i.z < nz_;
  }
  bool contains(const Vec3d& p) const { return in_bounds(index_of(p)); }

  /// Voxel containing a world point. May be out of bounds; check in_bounds.
  VoxelIndex index_of(const Vec3d& p) const {
    return {static_cast<int>(std::floor((p.x - origin_.x) / edge_)),
            static_cast<int>(std::floor((p.y - origin_.y) / edge_)),
            static_cast<int>(std::floor((p.z - origin_.z) / edge_))};
  }

  /// World-space center of a voxel.
  Vec3d center_of(const VoxelIndex& i) const {
    return {origin_.x + (i.x + 0.5) * edge_,
            origin_.y + (i.y + 0.5) * edge_,
            origin_.z + (i.z + 0.5) * edge_};
  }

  VoxelState state(const VoxelIndex& i) const {
    return in_bounds(i) ? cells_[flat(i)] : VoxelState::Unknown;
  }
  VoxelState state(const Vec3d& p) const { return state(index_of(p)); }

  /// Unchecked write, any transition. For building ground truth and fixtures.
  void set(const VoxelIndex& i, VoxelState s) { cells_[flat(i)] = s; }

  /// Monotone sensor-evidence write: Unknown->Free, Unknown->Occupied and
  /// Free->Occupied are applied, anything else is ignored. Returns true if
  /// the cell changed. Out-of-bounds writes are ignored.
  bool observe(const VoxelIndex& i, VoxelState s);

  /// Number of non-Unknown voxels.
  std::int64_t known_count() const { return known_; }

  /// known_count() * edge^3, the coverage metric.
  double mapped_volume() const {
    return static_cast<double>(known_) * edge_ * edge_ * edge_;
  }

  std::int64_t count(VoxelState s) const;

 private:
  std::size_t flat(const VoxelIndex& i) const {
    return (static_cast<std::size_t>(i.z) * ny_ + i.y) * nx_ + i.x;
  }

  Vec3d origin_;
  double edge_ = 0.1;
  int nx_ = 0, ny_ = 0, nz_ = 0;
  std::int64_t known_ = 0;
  std::vector<VoxelState> cells_;
};

}  // namespace rne
