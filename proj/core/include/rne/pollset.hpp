#pragma once

#include <vector>

#include "rne/errors.hpp"
#include "rne/geom.hpp"
#include "rne/sensor.hpp"

namespace rne {

// Precomputed spherical lattice for Sparse Ray Polling. One ray per
// (elevation, azimuth) pair, sampled at the range steps; the azimuth always
// covers the full revolution so the best sensor orientation can be extracted,
// regardless of the sensor's horizontal FoV.
//
//   r_i     = dr * i,     ceil(r_min/dr)      <= i <= floor(r_max/dr)
//   theta_j = dtheta * j, ceil(vmin/dtheta)   <= j <= floor(vmax/dtheta)
//   phi_k   = dphi * k,   0 <= k < 2*pi/dphi
class PollPointSet {
 public:
  double dr = 0.1;
  double dtheta = 0.0;
  double dphi = 0.0;
  int i_min = 0, i_max = -1;  // range bin indices, inclusive
  int j_min = 0, j_max = -1;  // elevation bin indices, inclusive
  int k_count = 0;            // azimuth bins

  /// Offsets laid out azimuth-major, then elevation, then ascending range,
  /// so one ray is contiguous and can stop at the first occupied poll.
  std::vector<Vec3d> offsets;

  int range_bins() const { return i_max - i_min + 1; }
  int elevation_bins() const { return j_max - j_min + 1; }
  int azimuth_bins() const { return k_count; }
  std::size_t size() const { return offsets.size(); }

  double azimuth_of_bin(int k) const { return dphi * k; }
};

/// Closed-form |P| for the lattice parameters; the built set must match it.
std::int64_t pollset_cardinality(const SensorModel& sensor, double dr,
                                 double dtheta, double dphi);

/// Throws ConfigError when any step size yields zero bins.
PollPointSet build_pollset(const SensorModel& sensor, double dr, double dtheta,
                           double dphi);

}  // namespace rne
