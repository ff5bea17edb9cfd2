#pragma once

#include <cmath>

namespace rne {

struct Vec2d {
  double x = 0.0;
  double y = 0.0;

  Vec2d operator+(const Vec2d& o) const { return {x + o.x, y + o.y}; }
  Vec2d operator-(const Vec2d& o) const { return {x - o.x, y - o.y}; }
  Vec2d operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2d& o) const { return x * o.x + y * o.y; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

struct Vec3d {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3d operator+(const Vec3d& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3d operator-(const Vec3d& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3d operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3d& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Vec2d xy() const { return {x, y}; }
};

inline double dist2d(const Vec2d& a, const Vec2d& b) { return (a - b).norm(); }
inline double dist2d(const Vec3d& a, const Vec3d& b) { return (a.xy() - b.xy()).norm(); }

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

/// Wraps an angle to [0, 2*pi).
inline double wrap_angle_2pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

/// Absolute angular separation, in [0, pi].
inline double angle_diff(double a, double b) { return std::abs(wrap_angle(a - b)); }

}  // namespace rne
