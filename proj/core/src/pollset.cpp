#include "rne/pollset.hpp"

#include <cmath>

namespace rne {
namespace {

constexpr double kBinEps = 1e-9;

// Inclusive index range [ceil(lo/step), floor(hi/step)] with a tolerance so
// that boundaries which are exact multiples of the step stay inside.
void index_range(double lo, double hi, double step, int& out_min,
                 int& out_max) {
  out_min = static_cast<int>(std::ceil(lo / step - kBinEps));
  out_max = static_cast<int>(std::floor(hi / step + kBinEps));
}

}  // namespace

std::int64_t pollset_cardinality(const SensorModel& sensor, double dr,
                                 double dtheta, double dphi) {
  if (dr <= 0.0 || dtheta <= 0.0 || dphi <= 0.0)
    throw ConfigError("poll set step sizes must be positive");
  int i_min, i_max, j_min, j_max;
  index_range(sensor.r_min, sensor.r_max, dr, i_min, i_max);
  index_range(sensor.vfov_min, sensor.vfov_max, dtheta, j_min, j_max);
  const int k_count = static_cast<int>(std::ceil(kTwoPi / dphi - kBinEps));
  const std::int64_t ri = i_max - i_min + 1;
  const std::int64_t tj = j_max - j_min + 1;
  if (ri <= 0 || tj <= 0 || k_count <= 0) return 0;
  return ri * tj * k_count;
}

PollPointSet build_pollset(const SensorModel& sensor, double dr, double dtheta,
                           double dphi) {
  if (!sensor.valid()) throw ConfigError("invalid sensor model for poll set");
  PollPointSet set;
  set.dr = dr;
  set.dtheta = dtheta;
  set.dphi = dphi;
  index_range(sensor.r_min, sensor.r_max, dr, set.i_min, set.i_max);
  index_range(sensor.vfov_min, sensor.vfov_max, dtheta, set.j_min, set.j_max);
  set.k_count = static_cast<int>(std::ceil(kTwoPi / dphi - kBinEps));
  if (set.range_bins() <= 0)
    throw ConfigError("poll set has zero range bins (dr too coarse)");
  if (set.elevation_bins() <= 0)
    throw ConfigError("poll set has zero elevation bins (dtheta too coarse)");
  if (set.k_count <= 0)
    throw ConfigError("poll set has zero azimuth bins (dphi too coarse)");

  set.offsets.reserve(static_cast<std::size_t>(set.range_bins()) *
                      set.elevation_bins() * set.k_count);
  for (int k = 0; k < set.k_count; ++k) {
    const double phi = dphi * k;
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    for (int j = set.j_min; j <= set.j_max; ++j) {
      const double theta = dtheta * j;
      const double ct = std::cos(theta), st = std::sin(theta);
      for (int i = set.i_min; i <= set.i_max; ++i) {
        const double r = dr * i;
        set.offsets.push_back({r * ct * cphi, r * ct * sphi, r * st});
      }
    }
  }
  return set;
}

}  // namespace rne
