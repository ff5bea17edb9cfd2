#pragma once

#include <string>

#include "rne/errors.hpp"
#include "rne/voxel_map.hpp"

namespace rne {

// Layered-ASCII environment format:
//   line 1:  voxelworld <nx> <ny> <nz> <e_V>
//   then nz blocks of ny lines with nx chars each, separated by "--".
//   '.' = Free, '#' = Occupied. The z=0 block (floor layer) comes first;
//   line r of a block is the row y=r. Trailing newline optional.
// The returned map is fully known ground truth with origin (0,0,0).
VoxelMap load_environment(const std::string& text);
VoxelMap load_environment_file(const std::string& path);

/// Serializes any voxel map in the layered-ASCII layout with header
/// "voxelmap ..."; Unknown cells print as '?'. Used for run artifacts.
std::string dump_voxel_map(const VoxelMap& map);

}  // namespace rne
