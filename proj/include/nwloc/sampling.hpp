#pragma once
// Seeded random draws shared by the check suites and the tests.
#include <Eigen/Geometry>
#include <cmath>
#include <random>

#include "nwloc/rotations.hpp"

namespace nwloc {

/// Haar-random rotation from a normalized Gaussian quaternion.
inline RotationMatrix random_rotation(std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  return q.toRotationMatrix();
}

/// Uniform on the sphere.
inline Direction random_direction(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), p(0.0, 2.0 * pi);
  return Direction(std::acos(u(rng)), p(rng));
}

inline Vec3 random_vector(std::mt19937_64 &rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

} // namespace nwloc
