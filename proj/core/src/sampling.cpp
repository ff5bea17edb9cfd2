#include "rne/sampling.hpp"

namespace rne {

SampleResult sample_point(const GridMap2D& grid, Rng& rng) {
  SampleResult res;
  if (!grid.has_known_tiles()) return res;
  const Vec2d lo = grid.known_min();
  const Vec2d hi = grid.known_max();
  res.point = {rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
  res.accepted = grid.traversable(res.point);
  return res;
}

SampleResult sample_point_local(const GridMap2D& grid, const Vec2d& robot_pos,
                                double r_ls, Rng& rng) {
  SampleResult res;
  for (;;) {
    const double dx = rng.uniform(-r_ls, r_ls);
    const double dy = rng.uniform(-r_ls, r_ls);
    if (dx * dx + dy * dy > r_ls * r_ls) continue;
    res.point = {robot_pos.x + dx, robot_pos.y + dy};
    break;
  }
  res.accepted = grid.traversable(res.point);
  return res;
}

}  // namespace rne
