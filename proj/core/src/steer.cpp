#include "rne/steer.hpp"

#include <algorithm>
#include <cmath>

namespace rne {

CorridorGeometry corridor_remainder(const Vec2d& x_rand, const Vec2d& x_n,
                                    const RobotFootprint& fp) {
  if (!fp.valid())
    throw ConfigError("invalid footprint: requires w_robot > 0 and r_robot >= w_robot/2");
  CorridorGeometry g;
  const double half_w = fp.w_robot * 0.5;
  g.d_diff = std::sqrt(fp.r_robot * fp.r_robot - half_w * half_w);
  g.d_rem = std::max(0.0, dist2d(x_rand, x_n) - 2.0 * g.d_diff);
  return g;
}

bool point_in_disc(const Vec2d& p, const Vec2d& center, double radius) {
  return (p - center).norm2() <= radius * radius;
}

bool point_in_corridor(const Vec2d& p, const Vec2d& x_rand, const Vec2d& x_n,
                       double d_rem, double width) {
  const Vec2d seg = x_n - x_rand;
  const double len = seg.norm();
  if (len <= 0.0) return false;
  const Vec2d dir{seg.x / len, seg.y / len};
  const Vec2d mid = (x_rand + x_n) * 0.5;
  const Vec2d rel = p - mid;
  const double along = rel.dot(dir);
  const double across = rel.x * (-dir.y) + rel.y * dir.x;
  return std::abs(along) <= d_rem * 0.5 && std::abs(across) <= width * 0.5;
}

namespace {

struct RowRange {
  int y_min, y_max;  // inclusive tile rows
  int x_min, x_max;  // inclusive tile columns (bounding box of the shape)
};

// Tile index range whose centers can fall inside [lo, hi], padded by one so
// the exact membership predicate decides all boundary cases.
RowRange bbox_range(const GridMap2D& grid, const Vec2d& lo, const Vec2d& hi) {
  const double res = grid.resolution();
  RowRange r;
  r.x_min = static_cast<int>(std::floor((lo.x - grid.origin().x) / res)) - 1;
  r.x_max = static_cast<int>(std::floor((hi.x - grid.origin().x) / res)) + 1;
  r.y_min = static_cast<int>(std::floor((lo.y - grid.origin().y) / res)) - 1;
  r.y_max = static_cast<int>(std::floor((hi.y - grid.origin().y) / res)) + 1;
  return r;
}

// Slice iteration: rows from the smallest y upward, tiles along X within
// each row. The predicate decides membership so the verdict matches the
// point-in-region oracle exactly.
template <typename Pred>
bool scan_region(const GridMap2D& grid, const RowRange& range, Pred inside,
                 SteerResult& out) {
  for (int y = range.y_min; y <= range.y_max; ++y) {
    for (int x = range.x_min; x <= range.x_max; ++x) {
      const TileIndex t{x, y};
      if (!inside(grid.center_of(t))) continue;
      ++out.tiles_checked;
      if (grid.state(t) != TileState::Traversable) {
        out.ok = false;
        out.blocking = t;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SteerResult check_disc(const GridMap2D& grid, const Vec2d& center, double radius) {
  SteerResult res;
  const RowRange range = bbox_range(grid, {center.x - radius, center.y - radius},
                                    {center.x + radius, center.y + radius});
  scan_region(grid, range,
              [&](const Vec2d& p) { return point_in_disc(p, center, radius); }, res);
  return res;
}

SteerResult steer(const GridMap2D& grid, const Vec2d& x_rand, const Vec2d& x_n,
                  const RobotFootprint& fp) {
  SteerResult res;
  const CorridorGeometry geo = corridor_remainder(x_rand, x_n, fp);
  const double d = dist2d(x_rand, x_n);

  if (geo.d_rem > 0.0 && d > 0.0) {
    const Vec2d dir = (x_n - x_rand) * (1.0 / d);
    const Vec2d perp{-dir.y, dir.x};
    const Vec2d mid = (x_rand + x_n) * 0.5;
    const Vec2d ext = dir * (geo.d_rem * 0.5);
    const Vec2d wid = perp * (fp.w_robot * 0.5);
    Vec2d lo = mid, hi = mid;
    for (const Vec2d& corner :
         {mid + ext + wid, mid + ext - wid, mid - ext + wid, mid - ext - wid}) {
      lo.x = std::min(lo.x, corner.x);
      lo.y = std::min(lo.y, corner.y);
      hi.x = std::max(hi.x, corner.x);
      hi.y = std::max(hi.y, corner.y);
    }
    if (!scan_region(grid, bbox_range(grid, lo, hi),
                     [&](const Vec2d& p) {
                       return point_in_corridor(p, x_rand, x_n, geo.d_rem, fp.w_robot);
                     },
                     res))
      return res;
  }

  const RowRange disc_range =
      bbox_range(grid, {x_rand.x - fp.r_robot, x_rand.y - fp.r_robot},
                 {x_rand.x + fp.r_robot, x_rand.y + fp.r_robot});
  scan_region(grid, disc_range,
              [&](const Vec2d& p) { return point_in_disc(p, x_rand, fp.r_robot); },
              res);
  return res;
}

}  // namespace rne
