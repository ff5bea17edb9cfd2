#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "rne/rng.hpp"
#include "rne/sampling.hpp"
#include "support/test_util.hpp"

using namespace rne;

namespace {

// Chi-square critical value for df=99 at p=0.01; a uniform source stays
// below it with 99% probability, a skewed one blows past it.
constexpr double kChi2Df99P01 = 134.642;

double chi_square(const std::vector<int>& counts, double expected) {
  double c = 0.0;
  for (int n : counts) {
    const double d = static_cast<double>(n) - expected;
    c += d * d / expected;
  }
  return c;
}

}  // namespace

TEST_CASE("seeded rng replays the same sequence") {
  Rng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    any_diff = any_diff || va != c.next_u64();
  }
  CHECK(all_equal);
  CHECK(any_diff);

  Rng d(42), e(42);
  for (int i = 0; i < 64; ++i) CHECK(d.uniform01() == e.uniform01());
}

TEST_CASE("uniform01 stays in range and passes a chi-square uniformity check") {
  Rng rng(1);
  std::vector<int> counts(100, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    ++counts[static_cast<int>(u * 100.0)];
  }
  CHECK(chi_square(counts, 1000.0) < kChi2Df99P01);
}

TEST_CASE("uniform_index covers its range uniformly") {
  Rng rng(2);
  std::vector<int> counts(100, 0);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t k = rng.uniform_index(100);
    REQUIRE(k < 100);
    ++counts[k];
  }
  CHECK(chi_square(counts, 1000.0) < kChi2Df99P01);
  CHECK(rng.uniform_index(1) == 0);
}

TEST_CASE("global sampling is uniform over the known rectangle") {
  GridMap2D grid = test::free_grid(10, 10, 0.1);
  Rng rng(3);
  std::vector<int> counts(100, 0);
  for (int i = 0; i < 10000; ++i) {
    const SampleResult s = sample_point(grid, rng);
    REQUIRE(s.accepted);  // everything is traversable
    const TileIndex t = grid.tile_of(s.point);
    REQUIRE(grid.in_bounds(t));
    ++counts[t.y * 10 + t.x];
  }
  CHECK(chi_square(counts, 100.0) < kChi2Df99P01);
}

TEST_CASE("samples landing on non-traversable tiles are rejected, not retried") {
  GridMap2D grid = test::free_grid(10, 10, 0.1);
  for (int y = 0; y < 10; ++y)
    for (int x = 5; x < 10; ++x) grid.set({x, y}, TileState::Obstacle);
  grid.finalize();

  Rng rng(4);
  int accepted = 0;
  for (int i = 0; i < 10000; ++i) {
    const SampleResult s = sample_point(grid, rng);
    if (!s.accepted) continue;
    ++accepted;
    CHECK(s.point.x < 0.5);  // only the left half is traversable
  }
  // The known rectangle spans both halves, so roughly half get rejected.
  CHECK(accepted > 4000);
  CHECK(accepted < 6000);
}

TEST_CASE("a grid with no known tiles yields no samples") {
  GridMap2D grid({0, 0}, 0.1, 10, 10);
  grid.finalize();
  Rng rng(5);
  for (int i = 0; i < 10; ++i) CHECK_FALSE(sample_point(grid, rng).accepted);
}

TEST_CASE("a single known tile focuses the sampler onto it") {
  GridMap2D grid({0, 0}, 0.1, 10, 10);
  grid.set({4, 7}, TileState::Traversable);
  grid.finalize();
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const SampleResult s = sample_point(grid, rng);
    REQUIRE(s.accepted);
    CHECK(grid.tile_of(s.point) == TileIndex{4, 7});
  }
}

TEST_CASE("local sampling stays inside the disc with the right radial profile") {
  GridMap2D grid = test::free_grid(200, 200, 0.1);
  const Vec2d robot{10.0, 10.0};
  const double r_ls = 2.5;
  Rng rng(7);

  double sum_dist = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const SampleResult s = sample_point_local(grid, robot, r_ls, rng);
    REQUIRE(s.accepted);
    const double d = dist2d(s.point, robot);
    REQUIRE(d <= r_ls + 1e-12);
    sum_dist += d;
  }
  // Uniform density on a disc has E[distance] = (2/3) r.
  const double mean_dist = sum_dist / n;
  CHECK(mean_dist == doctest::Approx((2.0 / 3.0) * r_ls).epsilon(0.03));
}

TEST_CASE("local sampling applies the same traversability acceptance") {
  GridMap2D grid = test::free_grid(100, 100, 0.1);
  for (int y = 0; y < 100; ++y)
    for (int x = 50; x < 100; ++x) grid.set({x, y}, TileState::Obstacle);
  grid.finalize();

  Rng rng(8);
  int accepted = 0, rejected = 0;
  for (int i = 0; i < 5000; ++i) {
    const SampleResult s = sample_point_local(grid, {5.0, 5.0}, 2.0, rng);
    if (s.accepted) {
      CHECK(s.point.x < 5.0);
      ++accepted;
    } else {
      CHECK(s.point.x >= 5.0);
      ++rejected;
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}
