#pragma once
// Product-grid 3D quadrature of the overlap integrals: Gauss-Legendre in
// cos(theta), uniform phi and Gauss-Legendre in |k| on a truncated range.
// No partial waves, Bessel functions or Laguerre rules are involved, so
// this serves as the independent check of overlap.hpp. Node counts are the
// supplied QuadratureSpec refined 4x.
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "nwloc/errors.hpp"
#include "nwloc/overlap.hpp"
#include "nwloc/quadrature.hpp"
#include "nwloc/states.hpp"

namespace nwloc::brute_force {

// e^{-a^2 k^2} < 1e-35 beyond this
inline constexpr double k_cutoff_in_units_of_inverse_a = 9.0;

/// int d^3k k^{m-2} e^{-a^2 k^2} e^{i k.r} G(k-hat) / (2 pi)^3 on the grid.
template <class Profile>
Eigen::MatrixXcd fourier_kernel(Profile &&profile, double m, const Vec3 &r,
                                double a, const QuadratureSpec &base) {
  base.validate();
  const QuadratureSpec q = base.refined(4);
  const AngularGrid grid = angular_grid(q.n_theta, q.n_phi);
  const QuadratureRule radial =
      gauss_legendre(q.n_radial, 0.0, k_cutoff_in_units_of_inverse_a / a);
  std::vector<double> radial_weight(radial.size());
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double k = radial.nodes[i];
    radial_weight[i] = radial.weights[i] * std::pow(k, m) * std::exp(-a * a * k * k);
  }

  Eigen::MatrixXcd sum;
  for (std::size_t n = 0; n < grid.directions.size(); ++n) {
    const Vec3 u = grid.directions[n].unit_vector();
    const double proj = u.dot(r);
    cdouble s = 0.0;
    for (std::size_t i = 0; i < radial.size(); ++i)
      s += radial_weight[i] * std::polar(1.0, radial.nodes[i] * proj);
    const Eigen::MatrixXcd g = profile(grid.directions[n]);
    if (sum.size() == 0)
      sum = Eigen::MatrixXcd::Zero(g.rows(), g.cols());
    sum += (grid.weights[n] * s) * g;
  }
  return sum / std::pow(2.0 * pi, 3);
}

/// <s1|s2> with the amplitudes' angular profiles taken from the states.
inline cdouble qm_overlap(const LocalizedState &s1, const LocalizedState &s2,
                          const QuadratureSpec &q = {}) {
  if (s1.x.t != s2.x.t)
    throw unsupported_configuration("brute_force::qm_overlap: unequal times");
  if (s1.regulator_width != s2.regulator_width)
    throw invalid_argument("brute_force::qm_overlap: unequal regulators");
  auto profile = [&](const Direction &dir) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(1, 1);
    for (int lambda = 1; lambda >= -1; --lambda)
      g(0, 0) += std::conj(direction_profile(s1, dir, lambda)) *
                 direction_profile(s2, dir, lambda);
    return g;
  };
  const double m = 3.0 - s1.family.weight_exponent - s2.family.weight_exponent;
  return fourier_kernel(profile, m, s1.x.x - s2.x.x, s1.regulator_width, q)(0, 0);
}

inline KernelMatrix overlap_kernel_matrix(const StateFamily &family,
                                          const Vec3 &r, double a,
                                          const QuadratureSpec &q = {}) {
  family.validate();
  if (family.kind == FamilyKind::scalar)
    throw invalid_argument("brute_force::overlap_kernel_matrix: scalar family");
  auto profile = [&](const Direction &dir) { return label_gram(family, dir); };
  return {r, fourier_kernel(profile, 3.0 - 2.0 * family.weight_exponent, r, a, q),
          family.kind, a};
}

inline Mat3 transverse_kernel(const Vec3 &r, double a,
                              const QuadratureSpec &q = {}) {
  auto profile = [](const Direction &dir) {
    const Vec3 u = dir.unit_vector();
    return Eigen::MatrixXcd((u * u.transpose()).cast<cdouble>());
  };
  return fourier_kernel(profile, 2.0, r, a, q).real();
}

inline KernelMatrix general_j_defect(int j, const HelicitySet &kept,
                                     const Vec3 &r, double a,
                                     const QuadratureSpec &q = {}) {
  const int d = 2 * j + 1;
  auto profile = [&](const Direction &dir) {
    Eigen::MatrixXcd g = helicity_sum_matrix(dir, kept, j).entries;
    g -= Eigen::MatrixXcd::Identity(d, d);
    return g;
  };
  return {r, fourier_kernel(profile, 2.0, r, a, q), std::nullopt, a};
}

} // namespace nwloc::brute_force
