#pragma once

#include "rne/errors.hpp"
#include "rne/geom.hpp"
#include "rne/grid_map.hpp"

namespace rne {

struct RobotFootprint {
  double r_robot = 0.5;  // radius of the endpoint disc, covers the footprint diagonal
  double w_robot = 0.6;  // corridor width

  bool valid() const { return w_robot > 0.0 && r_robot >= w_robot * 0.5; }
};

struct CorridorGeometry {
  double d_diff = 0.0;  // sqrt(r_robot^2 - (w_robot/2)^2)
  double d_rem = 0.0;   // d(x_rand, x_n) - 2*d_diff, clamped at 0
};

/// Endpoint-disc / corridor split. Throws ConfigError on an invalid footprint.
CorridorGeometry corridor_remainder(const Vec2d& x_rand, const Vec2d& x_n,
                                    const RobotFootprint& fp);

struct SteerResult {
  bool ok = true;
  TileIndex blocking{};      // first tile that is Obstacle or Unknown, when !ok
  int tiles_checked = 0;     // occupancy checks performed

  explicit operator bool() const { return ok; }
};

/// Checks every tile whose center lies inside the disc. Tiles outside the
/// grid count as Unknown and fail the check.
SteerResult check_disc(const GridMap2D& grid, const Vec2d& center, double radius);

// Traversability check between a new sample and an existing node: the tiles
// covered by the disc of radius r_robot around x_rand and by the w_robot-wide
// corridor of length d_rem centered on the segment must all be Traversable.
// The corridor is shortened by d_diff at both ends so the overlap with the
// endpoint discs is not re-checked; the disc around x_n was checked when that
// node was added and is skipped. Tiles are visited slice by slice along the
// X axis. Fails on the first Obstacle or Unknown tile.
SteerResult steer(const GridMap2D& grid, const Vec2d& x_rand, const Vec2d& x_n,
                  const RobotFootprint& fp);

/// Tile-center membership predicates shared with the region oracle in tests.
bool point_in_disc(const Vec2d& p, const Vec2d& center, double radius);
bool point_in_corridor(const Vec2d& p, const Vec2d& x_rand, const Vec2d& x_n,
                       double d_rem, double width);

}  // namespace rne
