#include "rne/voxel_map.hpp"

#include <algorithm>

namespace rne {

VoxelMap::VoxelMap(Vec3d origin, double edge_length, int nx, int ny, int nz,
                   VoxelState fill)
    : origin_(origin), edge_(edge_length), nx_(nx), ny_(ny), nz_(nz),
      cells_(static_cast<std::size_t>(nx) * ny * nz, fill) {
  if (fill != VoxelState::Unknown) known_ = static_cast<std::int64_t>(cells_.size());
}

bool VoxelMap::observe(const VoxelIndex& i, VoxelState s) {
  if (!in_bounds(i)) return false;
  VoxelState& cell = cells_[flat(i)];
  if (cell == s) return false;
  if (cell == VoxelState::Occupied) return false;  // never downgraded
  if (cell == VoxelState::Free && s != VoxelState::Occupied) return false;
  if (cell == VoxelState::Unknown) ++known_;
  cell = s;
  return true;
}

std::int64_t VoxelMap::count(VoxelState s) const {
  return std::count(cells_.begin(), cells_.end(), s);
}

}  // namespace rne
