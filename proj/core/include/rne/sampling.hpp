#pragma once

#include "rne/geom.hpp"
#include "rne/grid_map.hpp"
#include "rne/rng.hpp"

namespace rne {

struct SampleResult {
  bool accepted = false;
  Vec2d point;
};

/// Uniform sample over the bounding rectangle of the currently known tiles,
/// accepted only when it lands on a Traversable tile. The caller retries on
/// the next iteration; there is no internal retry loop.
SampleResult sample_point(const GridMap2D& grid, Rng& rng);

/// Uniform sample over the disc of radius r_ls around the robot (rejection
/// sampling from its bounding square) with the same traversability
/// acceptance.
SampleResult sample_point_local(const GridMap2D& grid, const Vec2d& robot_pos,
                                double r_ls, Rng& rng);

}  // namespace rne
