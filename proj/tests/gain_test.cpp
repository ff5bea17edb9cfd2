#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "rne/errors.hpp"
#include "rne/gain.hpp"
#include "rne/pollset.hpp"
#include "rne/rng.hpp"
#include "support/test_util.hpp"

using namespace rne;

namespace {

// Independent re-count of the lattice index ranges (inclusive, with the same
// exact-multiple tolerance the contract specifies).
std::int64_t literal_cardinality(const SensorModel& s, double dr, double dtheta,
                                 double dphi) {
  auto count_range = [](double lo, double hi, double step) {
    std::int64_t n = 0;
    const long long first = static_cast<long long>(std::ceil(lo / step - 1e-9));
    for (long long i = first; i * step <= hi + 1e-9; ++i) ++n;
    return n;
  };
  std::int64_t k = 0;
  for (long long i = 0; i * dphi < kTwoPi - 1e-9; ++i) ++k;
  return count_range(s.r_min, s.r_max, dr) *
         count_range(s.vfov_min, s.vfov_max, dtheta) * k;
}

// O(n^2) circular window maximum; ties keep the smallest start bin.
std::pair<int, int> best_window(const std::vector<int>& bins, int w) {
  int best = -1, best_k = 0;
  const int n = static_cast<int>(bins.size());
  for (int k = 0; k < n; ++k) {
    int s = 0;
    for (int t = 0; t < w; ++t) s += bins[(k + t) % n];
    if (s > best) {
      best = s;
      best_k = k;
    }
  }
  return {best, best_k};
}

// Four horizontal rays (+x, +y, -x, -y), seven polls each at r = 0.4..1.0.
PollPointSet four_ray_set() {
  SensorModel s;
  s.hfov = kPi / 2;
  s.vfov_min = -0.001;
  s.vfov_max = 0.001;
  s.r_min = 0.4;
  s.r_max = 1.0;
  return build_pollset(s, 0.1, 0.01, kPi / 2);
}

}  // namespace

TEST_CASE("poll set cardinality: frozen example and closed form vs literal count") {
  SensorModel s;
  s.vfov_min = -0.5;
  s.vfov_max = 0.5;
  s.r_min = 0.5;
  s.r_max = 8.0;

  const PollPointSet set = build_pollset(s, 0.1, deg_to_rad(10), deg_to_rad(10));
  CHECK(set.i_min == 5);
  CHECK(set.i_max == 80);
  CHECK(set.range_bins() == 76);
  CHECK(set.azimuth_bins() == 36);
  // vfov [-0.5, 0.5] at 10 deg steps: j in {-2..2}.
  CHECK(set.elevation_bins() == 5);
  CHECK(set.size() == 76u * 5u * 36u);
  CHECK(pollset_cardinality(s, 0.1, deg_to_rad(10), deg_to_rad(10)) ==
        static_cast<std::int64_t>(set.size()));

  // 20 random parameter draws: closed form == literal count == built size.
  Rng rng(99);
  static const double kDr[] = {0.05, 0.1, 0.2, 0.25};
  static const double kDang[] = {deg_to_rad(5), deg_to_rad(10), deg_to_rad(15),
                                 deg_to_rad(30), deg_to_rad(45)};
  for (int t = 0; t < 20; ++t) {
    SensorModel m;
    m.r_min = 0.05 * static_cast<double>(1 + rng.uniform_index(20));   // 0.05..1.0
    m.r_max = m.r_min + 0.05 * static_cast<double>(10 + rng.uniform_index(120));
    m.vfov_min = -deg_to_rad(5.0 * static_cast<double>(1 + rng.uniform_index(12)));
    m.vfov_max = deg_to_rad(5.0 * static_cast<double>(1 + rng.uniform_index(12)));
    const double dr = kDr[rng.uniform_index(4)];
    const double dt = kDang[rng.uniform_index(5)];
    const double dp = kDang[rng.uniform_index(5)];
    const std::int64_t closed = pollset_cardinality(m, dr, dt, dp);
    CHECK(closed == literal_cardinality(m, dr, dt, dp));
    if (closed > 0) {
      const PollPointSet ps = build_pollset(m, dr, dt, dp);
      CHECK(static_cast<std::int64_t>(ps.size()) == closed);
    }
  }
}

TEST_CASE("poll set rays are contiguous with ascending ranges") {
  SensorModel s;
  s.vfov_min = -0.3;
  s.vfov_max = 0.3;
  s.r_min = 0.3;
  s.r_max = 1.5;
  const PollPointSet set = build_pollset(s, 0.1, deg_to_rad(10), deg_to_rad(10));

  std::size_t idx = 0;
  for (int k = 0; k < set.k_count; ++k)
    for (int j = set.j_min; j <= set.j_max; ++j) {
      const double theta = set.dtheta * j;
      for (int i = set.i_min; i <= set.i_max; ++i, ++idx) {
        const Vec3d& o = set.offsets[idx];
        const double r = set.dr * i;
        CHECK(o.norm() == doctest::Approx(r).epsilon(1e-9));
        CHECK(o.z == doctest::Approx(r * std::sin(theta)).epsilon(1e-9));
        const double az = std::atan2(o.y, o.x);
        CHECK(angle_diff(az, set.azimuth_of_bin(k)) < 1e-9);
      }
    }
  CHECK(idx == set.size());
}

TEST_CASE("degenerate step sizes are configuration errors") {
  SensorModel s;
  s.vfov_min = 0.1;
  s.vfov_max = 0.2;
  s.r_min = 0.3;
  s.r_max = 8.0;
  // No multiple of 0.5 rad falls inside [0.1, 0.2].
  CHECK_THROWS_AS(build_pollset(s, 0.1, 0.5, deg_to_rad(10)), ConfigError);
  CHECK_THROWS_AS(pollset_cardinality(s, -0.1, 0.1, 0.1), ConfigError);
  // r window narrower than dr with no multiple inside.
  SensorModel r;
  r.r_min = 0.31;
  r.r_max = 0.39;
  CHECK_THROWS_AS(build_pollset(r, 0.2, 0.1, deg_to_rad(10)), ConfigError);
}

TEST_CASE("snap_to_ground finds the observed floor under the node") {
  VoxelMap world = test::floored_world(10, 10, 8, 0.1);
  GainParams p;
  p.h_max = 0.3;
  p.h_sensor = 0.5;
  p.robot_height = 0.3;

  // Flat floor: ground top at 0.1, sensor at 0.6.
  auto z = snap_to_ground(world, {0.55, 0.55}, 0.6, p);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(0.6));

  // Expected height far above any ground: unreachable.
  CHECK_FALSE(snap_to_ground(world, {0.55, 0.55}, 1.5, p).has_value());

  // No ground at all in the column.
  VoxelMap pit({0, 0, 0}, 0.1, 4, 4, 8, VoxelState::Free);
  CHECK_FALSE(snap_to_ground(pit, {0.15, 0.15}, 0.6, p).has_value());

  // Unknown column: no observed ground either.
  VoxelMap dark({0, 0, 0}, 0.1, 4, 4, 8);
  CHECK_FALSE(snap_to_ground(dark, {0.15, 0.15}, 0.6, p).has_value());

  // Out of the map in x/y: unreachable.
  CHECK_FALSE(snap_to_ground(world, {-0.5, 0.55}, 0.6, p).has_value());
}

TEST_CASE("snap_to_ground picks the candidate nearest the expected height") {
  // Two stacked floors: ground tops at 0.1 and 0.5.
  VoxelMap world({0, 0, 0}, 0.1, 4, 4, 8, VoxelState::Free);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) {
      world.set({x, y, 0}, VoxelState::Occupied);
      world.set({x, y, 4}, VoxelState::Occupied);
    }
  GainParams p;
  p.h_max = 0.5;
  p.h_sensor = 0.5;
  p.robot_height = 0.3;

  // Expected sensor 1.05 -> target ground 0.55: the mezzanine wins.
  auto z = snap_to_ground(world, {0.15, 0.15}, 1.05, p);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(1.0));

  // Expected sensor 0.55 -> target ground 0.05: the base floor wins.
  z = snap_to_ground(world, {0.15, 0.15}, 0.55, p);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(0.6));

  // Exactly between the two (target 0.3): ties go to the lower ground.
  z = snap_to_ground(world, {0.15, 0.15}, 0.8, p);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(0.6));
}

TEST_CASE("ramp fixture: neighbor-average start height snaps to the local ground") {
  // Ground rises one voxel per column: tops 0.1, 0.2, 0.3, 0.4.
  VoxelMap world({0, 0, 0}, 0.1, 4, 1, 10, VoxelState::Free);
  for (int x = 0; x < 4; ++x)
    for (int z = 0; z <= x; ++z) world.set({x, 0, z}, VoxelState::Occupied);
  GainParams p;
  p.h_max = 0.25;
  p.h_sensor = 0.5;
  p.robot_height = 0.3;

  // Neighbor heights {0.5, 0.7} average to 0.6 over the column with ground 0.2.
  auto z = snap_to_ground(world, {0.15, 0.05}, 0.6, p);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(0.7));  // ground 0.2 + sensor 0.5
  z = snap_to_ground(world, {0.35, 0.05}, 0.8, p);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(0.9));  // ground 0.4
}

TEST_CASE("gain is zero on fully known free space") {
  VoxelMap map({0, 0, 0}, 0.1, 40, 40, 10, VoxelState::Free);
  const PollPointSet set = four_ray_set();
  const GainResult res = evaluate_gain(map, set, {2.05, 2.05, 0.55}, kPi / 2);
  CHECK(res.gain == 0);
  CHECK(res.reachable());
  for (int b : res.bin_gains) CHECK(b == 0);
}

TEST_CASE("gain on a fully unknown map counts every poll point") {
  VoxelMap map({0, 0, 0}, 0.1, 40, 40, 12);
  const PollPointSet set = four_ray_set();
  // 360-degree window: all four bins, seven polls each.
  const GainResult res = evaluate_gain(map, set, {2.05, 2.05, 0.55}, kTwoPi);
  CHECK(res.gain == static_cast<int>(set.size()));
  CHECK(res.gain == 28);
  for (int b : res.bin_gains) CHECK(b == 7);
  CHECK(max_window_gain(set, kTwoPi) == 28);
  CHECK(window_bins(set, kPi / 2) == 1);
  CHECK(max_window_gain(set, kPi / 2) == 7);
}

TEST_CASE("rays count unknown polls, pass through them, and stop at occupied") {
  const PollPointSet set = four_ray_set();
  VoxelMap map({0, 0, 0}, 0.1, 40, 40, 10, VoxelState::Free);
  const Vec3d origin{2.05, 2.05, 0.55};

  // One unknown voxel on the +x ray at r = 0.7.
  map.set({27, 20, 5}, VoxelState::Unknown);
  GainResult res = evaluate_gain(map, set, origin, kPi / 2);
  CHECK(res.bin_gains == std::vector<int>{1, 0, 0, 0});
  CHECK(res.gain == 1);
  CHECK(res.best_yaw == doctest::Approx(0.0));

  // A second unknown behind the first: the ray kept going.
  map.set({30, 20, 5}, VoxelState::Unknown);
  res = evaluate_gain(map, set, origin, kPi / 2);
  CHECK(res.bin_gains == std::vector<int>{2, 0, 0, 0});

  // A wall behind both unknowns changes nothing...
  map.set({29, 20, 5}, VoxelState::Occupied);
  res = evaluate_gain(map, set, origin, kPi / 2);
  CHECK(res.bin_gains == std::vector<int>{1, 0, 0, 0});  // r=1.0 poll now cut off

  // ...but a wall in front of them blanks the bin.
  map.set({25, 20, 5}, VoxelState::Occupied);
  res = evaluate_gain(map, set, origin, kPi / 2);
  CHECK(res.bin_gains == std::vector<int>{0, 0, 0, 0});
  CHECK(res.gain == 0);
}

TEST_CASE("leaving the map ends a ray without errors") {
  const PollPointSet set = four_ray_set();
  VoxelMap map({0, 0, 0}, 0.1, 40, 40, 10, VoxelState::Free);
  map.set({1, 20, 5}, VoxelState::Unknown);  // -x ray, r = 0.4
  map.set({0, 20, 5}, VoxelState::Unknown);  // -x ray, r = 0.5; r >= 0.6 leaves
  const GainResult res = evaluate_gain(map, set, {0.55, 2.05, 0.55}, kPi / 2);
  CHECK(res.bin_gains[2] == 2);  // bin 2 is azimuth pi
  CHECK(res.gain == 2);
  CHECK(res.best_yaw == doctest::Approx(wrap_angle(kPi)));
}

TEST_CASE("window extraction maximizes the circular sum, ties to smallest bin") {
  const PollPointSet set = four_ray_set();
  VoxelMap map({0, 0, 0}, 0.1, 40, 40, 10, VoxelState::Free);
  const Vec3d origin{2.05, 2.05, 0.55};

  // Unknowns on +y only: best single-bin window is azimuth pi/2.
  map.set({20, 26, 5}, VoxelState::Unknown);
  map.set({20, 28, 5}, VoxelState::Unknown);
  GainResult res = evaluate_gain(map, set, origin, kPi / 2);
  CHECK(res.gain == 2);
  CHECK(res.best_yaw == doctest::Approx(kPi / 2));

  // Equal gain on +x: the tie moves the window to the smaller bin (yaw 0).
  map.set({26, 20, 5}, VoxelState::Unknown);
  map.set({28, 20, 5}, VoxelState::Unknown);
  res = evaluate_gain(map, set, origin, kPi / 2);
  CHECK(res.gain == 2);
  CHECK(res.best_yaw == doctest::Approx(0.0));

  // A two-bin window spans both sectors.
  res = evaluate_gain(map, set, origin, kPi);
  CHECK(res.gain == 4);
}

TEST_CASE("gain invariants on random clutter: bounds, idempotence, monotonicity") {
  SensorModel s;
  s.vfov_min = -0.3;
  s.vfov_max = 0.3;
  s.r_min = 0.3;
  s.r_max = 2.0;
  const PollPointSet set = build_pollset(s, 0.1, deg_to_rad(10), deg_to_rad(10));
  const double hfov = kPi / 2;

  Rng rng(314);
  VoxelMap map({0, 0, 0}, 0.1, 30, 30, 10, VoxelState::Free);
  for (int z = 0; z < 10; ++z)
    for (int y = 0; y < 30; ++y)
      for (int x = 0; x < 30; ++x) {
        const double u = rng.uniform01();
        if (u < 0.2) map.set({x, y, z}, VoxelState::Unknown);
        else if (u < 0.3) map.set({x, y, z}, VoxelState::Occupied);
      }
  const Vec3d origin{1.55, 1.55, 0.55};

  const GainResult a = evaluate_gain(map, set, origin, hfov);
  CHECK(a.gain >= 0);
  CHECK(a.gain <= max_window_gain(set, hfov));
  CHECK(max_window_gain(set, hfov) <= static_cast<int>(set.size()));

  // The reported window is the best one over all start bins.
  const auto [best_sum, best_k] = best_window(a.bin_gains, window_bins(set, hfov));
  CHECK(a.gain == best_sum);
  CHECK(angle_diff(a.best_yaw, set.azimuth_of_bin(best_k)) < 1e-9);

  // Same map, same node: identical result.
  const GainResult b = evaluate_gain(map, set, origin, hfov);
  CHECK(b.gain == a.gain);
  CHECK(b.best_yaw == a.best_yaw);
  CHECK(b.bin_gains == a.bin_gains);

  // Extra obstacles can only shrink each azimuth bin.
  for (int t = 0; t < 50; ++t) {
    const VoxelIndex v{static_cast<int>(rng.uniform_index(30)),
                       static_cast<int>(rng.uniform_index(30)),
                       static_cast<int>(rng.uniform_index(10))};
    map.set(v, VoxelState::Occupied);
  }
  const GainResult c = evaluate_gain(map, set, origin, hfov);
  CHECK(c.gain <= a.gain);
  for (std::size_t k = 0; k < a.bin_gains.size(); ++k)
    CHECK(c.bin_gains[k] <= a.bin_gains[k]);
}

TEST_CASE("sparse polling tracks the exhaustive per-poll visibility oracle") {
  // Half-scanned room: known free space, a two-voxel-thick wall with a door,
  // unknown space behind it.
  VoxelMap map({0, 0, 0}, 0.1, 30, 30, 10);
  for (int z = 0; z < 10; ++z)
    for (int y = 0; y < 30; ++y) {
      for (int x = 0; x < 18; ++x)
        map.set({x, y, z}, z == 0 ? VoxelState::Occupied : VoxelState::Free);
      for (int x = 18; x < 20; ++x) {
        const bool door = y >= 12 && y <= 15 && z >= 1 && z <= 6;
        map.set({x, y, z}, door ? VoxelState::Free : VoxelState::Occupied);
      }
      // x >= 20 stays Unknown.
    }

  SensorModel s;
  s.vfov_min = -0.35;
  s.vfov_max = 0.35;
  s.r_min = 0.3;
  s.r_max = 2.0;
  const PollPointSet set = build_pollset(s, 0.1, deg_to_rad(10), deg_to_rad(10));
  const double hfov = kPi / 2;
  const Vec3d origin{1.05, 1.45, 0.55};

  const GainResult got = evaluate_gain(map, set, origin, hfov);

  // Oracle: exact continuous line of sight to every poll point, stopping at
  // the first occupied voxel or the map border.
  std::vector<int> bins(set.k_count, 0);
  for (int k = 0; k < set.k_count; ++k) {
    const double phi = set.dphi * k;
    for (int j = set.j_min; j <= set.j_max; ++j) {
      const double theta = set.dtheta * j;
      const Vec3d dir{std::cos(theta) * std::cos(phi),
                      std::cos(theta) * std::sin(phi), std::sin(theta)};
      for (int i = set.i_min; i <= set.i_max; ++i) {
        const double r = set.dr * i;
        const Vec3d p = origin + dir * r;
        if (!map.contains(p)) break;
        const VoxelIndex target = map.index_of(p);
        bool blocked = false;
        for (double t = 0.0125; t < r; t += 0.0125) {
          const VoxelIndex q = map.index_of(origin + dir * t);
          if (q == target) break;
          if (map.state(q) == VoxelState::Occupied) {
            blocked = true;
            break;
          }
        }
        if (blocked) break;
        if (map.state(target) == VoxelState::Unknown) ++bins[k];
      }
    }
  }
  const auto [oracle_gain, oracle_k] = best_window(bins, window_bins(set, hfov));

  REQUIRE(oracle_gain > 0);
  CHECK(std::abs(got.gain - oracle_gain) <= 0.1 * oracle_gain);
  CHECK(angle_diff(got.best_yaw, set.azimuth_of_bin(oracle_k)) <=
        2.0 * set.dphi + 1e-9);
}

TEST_CASE("status rule covers all four Eq-3 branches") {
  const double dphi = deg_to_rad(10);

  // Unreachable ground dominates everything.
  CHECK(status_after_gain(-1, 100, 0.05, false, 0, 0, dphi) == NodeStatus::Failed);
  CHECK(status_after_gain(-1, 100, 0.05, true, 0, 0, dphi) == NodeStatus::Failed);

  // Below the gain threshold: explored.
  CHECK(status_after_gain(4, 100, 0.05, false, 0, 1.0, dphi) == NodeStatus::Explored);
  CHECK(status_after_gain(9, 100, 0.10, false, 0, 1.0, dphi) == NodeStatus::Explored);
  // Exactly at the threshold: the comparison is strict, stays a candidate.
  CHECK(status_after_gain(5, 100, 0.05, false, 0, 1.0, dphi) == NodeStatus::Initial);
  CHECK(status_after_gain(10, 100, 0.10, false, 0, 1.0, dphi) == NodeStatus::Initial);

  // Visited and the best yaw did not move by more than one bin: explored.
  CHECK(status_after_gain(30, 100, 0.05, true, 0.5, 0.5, dphi) ==
        NodeStatus::Explored);
  CHECK(status_after_gain(30, 100, 0.05, true, 0.5, 0.5 + dphi, dphi) ==
        NodeStatus::Explored);
  // Wrap-around closeness counts too.
  CHECK(status_after_gain(30, 100, 0.05, true, kPi - 0.02, -kPi + 0.02, dphi) ==
        NodeStatus::Explored);
  // Yaw moved beyond one bin: still worth visiting.
  CHECK(status_after_gain(30, 100, 0.05, true, 0.5, 0.5 + 2.5 * dphi, dphi) ==
        NodeStatus::Initial);

  // Healthy gain on an unvisited node: candidate.
  CHECK(status_after_gain(30, 100, 0.05, false, 0.0, 2.0, dphi) ==
        NodeStatus::Initial);
}
