#pragma once
/**
 * Rotation group machinery: unit-sphere directions, proper rotations,
 * the standard rotation carrying z onto a momentum direction, integer-spin
 * Wigner D-matrices, little-group (Wigner) angles and the unitary map
 * between the spherical basis |sigma> and the Cartesian basis |i>.
 *
 * Conventions:
 *  - spherical indices are ordered sigma = +j, ..., -j, so row/column
 *    index = j - sigma;
 *  - D_{sigma' sigma}(R) = <j sigma'| exp(-i angle n.J) |j sigma> with
 *    Condon-Shortley phases.
 */
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "nwloc/errors.hpp"

namespace nwloc {

using cdouble = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;
using RotationMatrix = Eigen::Matrix3d;

inline constexpr double pi = std::numbers::pi;
inline constexpr int default_j_max = 10;

/// Point on the unit sphere. At the poles phi is stored as 0.
class Direction {
public:
  Direction() = default;

  Direction(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= pi))
      throw invalid_argument("Direction: theta must lie in [0, pi]");
    if (!std::isfinite(phi))
      throw invalid_argument("Direction: phi must be finite");
    phi = std::fmod(phi, 2.0 * pi);
    if (phi < 0.0)
      phi += 2.0 * pi;
    if (phi >= 2.0 * pi)
      phi = 0.0;
    if (theta == 0.0 || theta == pi)
      phi = 0.0;
    theta_ = theta;
    phi_ = phi;
  }

  static Direction from_vector(const Vec3 &v) {
    const double rho = std::hypot(v.x(), v.y());
    if (rho == 0.0 && v.z() == 0.0)
      throw undefined_direction("Direction::from_vector: zero vector");
    if (rho == 0.0)
      return Direction(v.z() > 0.0 ? 0.0 : pi, 0.0);
    return Direction(std::atan2(rho, v.z()), std::atan2(v.y(), v.x()));
  }

  static Direction z_axis() { return Direction(0.0, 0.0); }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  Vec3 unit_vector() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
  }

private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

/// Rodrigues rotation; the axis is normalized internally.
inline RotationMatrix rotation_from_axis_angle(const Vec3 &axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw invalid_argument("rotation_from_axis_angle: axis must be nonzero");
  const Vec3 u = axis / n;
  Mat3 K;
  K << 0.0, -u.z(), u.y(), u.z(), 0.0, -u.x(), -u.y(), u.x(), 0.0;
  return Mat3::Identity() + std::sin(angle) * K +
         (1.0 - std::cos(angle)) * (K * K);
}

inline RotationMatrix rotation_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 R;
  R << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return R;
}

inline RotationMatrix rotation_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 R;
  R << c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c;
  return R;
}

/// R_z(phi) R_y(theta) R_z(-phi): carries z onto the direction.
inline RotationMatrix standard_rotation(const Direction &dir) {
  return rotation_z(dir.phi()) * rotation_y(dir.theta()) *
         rotation_z(-dir.phi());
}

inline bool is_rotation(const RotationMatrix &R, double tol = 1e-12) {
  return (R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff() < tol &&
         std::abs(R.determinant() - 1.0) < tol;
}

/// Spin-j representation matrix, rows/columns ordered sigma = +j..-j.
struct WignerDMatrix {
  int j = 0;
  Eigen::MatrixXcd entries;

  static constexpr int index(int j, int sigma) { return j - sigma; }

  cdouble operator()(int sigma_row, int sigma_col) const {
    return entries(index(j, sigma_row), index(j, sigma_col));
  }
  int dim() const { return 2 * j + 1; }
};

struct SpinGenerators {
  Eigen::MatrixXcd jx, jy, jz;
};

/// Angular momentum matrices for integer spin j in the |j,m> basis.
inline SpinGenerators spin_generators(int j) {
  const int d = 2 * j + 1;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(d, d);
  for (int m = -j; m <= j; ++m) {
    jz(WignerDMatrix::index(j, m), WignerDMatrix::index(j, m)) = double(m);
    if (m < j) {
      // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
      const double c = std::sqrt(double(j * (j + 1) - m * (m + 1)));
      jp(WignerDMatrix::index(j, m + 1), WignerDMatrix::index(j, m)) = c;
    }
  }
  const Eigen::MatrixXcd jm = jp.adjoint();
  const cdouble i(0.0, 1.0);
  return {(jp + jm) / 2.0, (jp - jm) / (2.0 * i), jz};
}

inline WignerDMatrix wigner_D(int j, const RotationMatrix &R,
                              int j_max = default_j_max) {
  if (j < 0 || j > j_max)
    throw unsupported_spin("wigner_D: spin j=" + std::to_string(j) +
                           " outside [0, " + std::to_string(j_max) + "]");
  const int d = 2 * j + 1;
  WignerDMatrix D{j, Eigen::MatrixXcd::Identity(d, d)};
  if (j == 0)
    return D;

  const Eigen::Quaterniond q(R);
  const Eigen::AngleAxisd aa(q);
  const double angle = aa.angle();
  if (angle == 0.0)
    return D;
  const Vec3 n = aa.axis();

  const SpinGenerators g = spin_generators(j);
  const Eigen::MatrixXcd h = n.x() * g.jx + n.y() * g.jy + n.z() * g.jz;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(d);
  for (int k = 0; k < d; ++k) {
    // spectrum of n.J is exactly {-j, ..., j}
    const double m = std::round(es.eigenvalues()(k));
    phases(k) = std::exp(cdouble(0.0, -angle * m));
  }
  D.entries = es.eigenvectors() * phases.asDiagonal() *
              es.eigenvectors().adjoint();
  return D;
}

struct WignerAngle {
  double radians = 0.0;
};

/// Angle w with R0^-1[R k] R R0[k] = R_z(w); w in (-pi, pi].
inline WignerAngle wigner_angle(const RotationMatrix &R, const Direction &dir,
                                double tol = 1e-12) {
  const Direction rotated = Direction::from_vector(R * dir.unit_vector());
  const Mat3 little = standard_rotation(rotated).transpose() * R *
                      standard_rotation(dir);
  if (std::abs(little(2, 2) - 1.0) > tol)
    throw consistency_error("wigner_angle: composed rotation does not fix z");
  double w = std::atan2(little(1, 0), little(0, 0));
  if (w <= -pi)
    w += 2.0 * pi;
  return {w};
}

/// <sigma|i> = sqrt(4 pi / 3) Y*_{1 sigma}(e_i), rows sigma = +1, 0, -1.
inline CMat3 spherical_to_cartesian() {
  const double h = 1.0 / std::sqrt(2.0);
  const cdouble i(0.0, 1.0);
  CMat3 C;
  C << -h, i * h, 0.0,
       0.0, 0.0, 1.0,
       h, i * h, 0.0;
  return C;
}

} // namespace nwloc
