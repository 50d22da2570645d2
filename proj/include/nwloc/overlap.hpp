#pragma once
/**
 * Scalar-product engine for regulated localized states.
 *
 * Every equal-time overlap reduces to
 *
 *   K(r) = (2 pi)^{-3} int d^3k  k^{m-2} e^{-a^2 k^2} G(k-hat) e^{i k.r}
 *
 * with G a low-degree polynomial in k-hat (a helicity-sum matrix) and m the
 * radial power left after combining the measure with the amplitude
 * weights. The plane wave is expanded in partial waves,
 *
 *   K(r) = (2 pi)^{-3} sum_l i^l (2l+1) A_l(r-hat) B_l(r),
 *   A_l  = int dOmega G(k-hat) P_l(k-hat . r-hat),
 *   B_l  = int_0^inf dk k^m e^{-a^2 k^2} j_l(k r),
 *
 * which terminates at l = deg G. A_l is integrated exactly on a
 * Gauss-Legendre(cos theta) x uniform(phi) grid; B_l uses a
 * generalized Gauss-Laguerre rule after u = a^2 k^2, with the j_l(x) ~ x^l
 * behaviour folded into the weight so the integrand is entire in u.
 */
#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "nwloc/bessel.hpp"
#include "nwloc/errors.hpp"
#include "nwloc/polarization.hpp"
#include "nwloc/quadrature.hpp"
#include "nwloc/rotations.hpp"
#include "nwloc/states.hpp"

namespace nwloc {

struct KernelMatrix {
  Vec3 separation = Vec3::Zero();
  Eigen::MatrixXcd entries;
  std::optional<FamilyKind> family;
  double regulator_width = 1.0;
};

/// (2 pi)^{-3} int d^3k e^{-a^2 k^2} e^{i k.r}: the regulated delta function.
inline double regulated_delta(double r, double a) {
  return std::exp(-r * r / (4.0 * a * a)) /
         (8.0 * std::pow(pi, 1.5) * a * a * a);
}

struct AngularGrid {
  std::vector<Direction> directions;
  std::vector<double> weights; // sum to 4 pi
};

inline AngularGrid angular_grid(int n_theta, int n_phi) {
  const QuadratureRule gl = gauss_legendre(n_theta);
  AngularGrid g;
  g.directions.reserve(std::size_t(n_theta) * n_phi);
  g.weights.reserve(std::size_t(n_theta) * n_phi);
  for (int it = 0; it < n_theta; ++it) {
    const double theta = std::acos(gl.nodes[it]);
    for (int ip = 0; ip < n_phi; ++ip) {
      g.directions.emplace_back(theta, 2.0 * pi * ip / n_phi);
      g.weights.push_back(gl.weights[it] * 2.0 * pi / n_phi);
    }
  }
  return g;
}

namespace detail {

inline std::vector<double> legendre_all(int L, double x) {
  std::vector<double> p(L + 1);
  p[0] = 1.0;
  if (L >= 1)
    p[1] = x;
  for (int l = 1; l < L; ++l)
    p[l + 1] = ((2.0 * l + 1.0) * x * p[l] - l * p[l - 1]) / (l + 1.0);
  return p;
}

inline Vec3 unit_or_z(const Vec3 &r) {
  const double n = r.norm();
  return n > 0.0 ? Vec3(r / n) : Vec3::UnitZ();
}

} // namespace detail

/// int_0^inf dk k^m e^{-a^2 k^2} j_l(k r).
inline double radial_moment(int l, double m, double r, double a,
                            const QuadratureSpec &q) {
  if (!(a > 0.0))
    throw invalid_argument("radial_moment: regulator width must be > 0");
  if (r == 0.0 && l > 0)
    return 0.0;
  if (q.radial == RadialRule::gaussian_weight) {
    // k = sqrt(u)/a; k^m dk = u^{(m-1)/2} du / (2 a^{m+1}); j_l(x) = x^l g_l(x)
    const double c = r / a;
    // the integrand oscillates on a scale ~ sqrt(u) / c; ~6.5 c nodes resolve it
    const int n = std::max(q.n_radial, static_cast<int>(std::ceil(6.5 * c)));
    const QuadratureRule rule = gauss_laguerre(n, 0.5 * (m - 1.0 + l));
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
      sum += rule.weights[i] * sph_bessel_scaled(l, c * std::sqrt(rule.nodes[i]));
    return 0.5 * std::pow(c, l) * sum / std::pow(a, m + 1.0);
  }
  auto f = [&](double k) {
    return std::pow(k, m) * std::exp(-a * a * k * k) * sph_bessel(l, k * r);
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, 0.0, std::numeric_limits<double>::infinity(), 20, q.abs_tol);
}

/// Partial-wave evaluation of the Fourier kernel for a matrix-valued
/// angular profile `profile(Direction) -> MatrixXcd` of degree <= degree.
template <class Profile>
Eigen::MatrixXcd fourier_kernel(Profile &&profile, int degree, double m,
                                const Vec3 &r, double a,
                                const QuadratureSpec &q) {
  q.validate();
  if (!(a > 0.0))
    throw invalid_argument("fourier_kernel: regulator width must be > 0");
  // exactness: G P_l has degree <= 2 * degree
  const int n_theta = std::max(q.n_theta, degree + 1);
  const int n_phi = std::max(q.n_phi, 2 * degree + 1);
  const AngularGrid grid = angular_grid(n_theta, n_phi);
  const Vec3 rhat = detail::unit_or_z(r);
  const double rn = r.norm();

  std::vector<Eigen::MatrixXcd> moments;
  for (std::size_t n = 0; n < grid.directions.size(); ++n) {
    const Direction &dir = grid.directions[n];
    const Eigen::MatrixXcd g = profile(dir);
    if (moments.empty())
      moments.assign(degree + 1, Eigen::MatrixXcd::Zero(g.rows(), g.cols()));
    const auto p = detail::legendre_all(degree, dir.unit_vector().dot(rhat));
    for (int l = 0; l <= degree; ++l)
      moments[l] += (grid.weights[n] * p[l]) * g;
  }

  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(moments[0].rows(),
                                              moments[0].cols());
  cdouble il(1.0, 0.0);
  for (int l = 0; l <= degree; ++l) {
    k += (il * (2.0 * l + 1.0) * radial_moment(l, m, rn, a, q)) * moments[l];
    il *= cdouble(0.0, 1.0);
  }
  return k / std::pow(2.0 * pi, 3);
}

namespace detail {

inline void require_overlap_compatible(const LocalizedState &s1,
                                       const LocalizedState &s2) {
  if (s1.family.frequency != FrequencySign::positive ||
      s2.family.frequency != FrequencySign::positive)
    throw unsupported_configuration(
        "overlap: negative-frequency states are translation fixtures only");
  if (s1.x.t != s2.x.t)
    throw unsupported_configuration("overlap: only equal-time overlaps");
  if (s1.regulator_width != s2.regulator_width)
    throw invalid_argument("overlap: states must share the regulator width");
}

// Angular degree of every helicity-summed profile of the spin-1 families.
inline constexpr int spin1_degree = 2;

} // namespace detail

/// <s1|s2> under <k1 l1|k2 l2> = delta_l1l2 omega delta^3(k1 - k2).
inline cdouble qm_overlap(const LocalizedState &s1, const LocalizedState &s2,
                          const QuadratureSpec &q = {}) {
  detail::require_overlap_compatible(s1, s2);
  auto profile = [&](const Direction &dir) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(1, 1);
    for (int lambda = 1; lambda >= -1; --lambda)
      g(0, 0) += std::conj(direction_profile(s1, dir, lambda)) *
                 direction_profile(s2, dir, lambda);
    return g;
  };
  // d^3k omega omega^{-p1-p2}: radial power 3 - p1 - p2
  const double m =
      3.0 - s1.family.weight_exponent - s2.family.weight_exponent;
  return fourier_kernel(profile, detail::spin1_degree, m, s1.x.x - s2.x.x,
                        s1.regulator_width, q)(0, 0);
}

/// Label-summed alternative pairing of two radiation-gauge triplets. The
/// pairing weighs the omega^{-1} amplitudes with omega^2 d^3k, so only
/// sum_i e^i e*^i survives in the integrand. The labels of s1, s2 are
/// traced over, not used.
inline cdouble alt_overlap(const LocalizedState &s1, const LocalizedState &s2,
                           const QuadratureSpec &q = {}) {
  if (s1.family.kind != FamilyKind::hawton ||
      s2.family.kind != FamilyKind::hawton)
    throw unsupported_configuration("alt_overlap: defined for hawton states only");
  detail::require_overlap_compatible(s1, s2);
  auto profile = [&](const Direction &dir) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(1, 1);
    for (int lambda : s1.family.helicities.values())
      g(0, 0) += polarization_vector(dir, lambda).spatial().squaredNorm();
    return g;
  };
  // omega^2 omega^{-2} d^3k
  const double m =
      4.0 - s1.family.weight_exponent - s2.family.weight_exponent;
  return fourier_kernel(profile, detail::spin1_degree, m, s1.x.x - s2.x.x,
                        s1.regulator_width, q)(0, 0);
}

/// (2 pi)^{-3} int d^3k k-hat_i k-hat_j e^{i k.r} e^{-a^2 k^2}.
inline Mat3 transverse_kernel(const Vec3 &r, double a,
                              const QuadratureSpec &q = {}) {
  auto profile = [](const Direction &dir) {
    const Vec3 u = dir.unit_vector();
    return Eigen::MatrixXcd((u * u.transpose()).cast<cdouble>());
  };
  return fourier_kernel(profile, 2, 2.0, r, a, q).real();
}

/// Sum over the family's helicities of conj(coeff_l1) coeff_l2.
inline Eigen::MatrixXcd label_gram(const StateFamily &family,
                                   const Direction &dir) {
  const int n = label_count(family.kind);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (int lambda : family.helicities.values()) {
    const Eigen::VectorXcd c = label_coefficients(family, dir, lambda);
    g += c.conjugate() * c.transpose();
  }
  return g;
}

/// Label-by-label equal-time overlaps <x1, l1|x2, l2> with r = x1 - x2.
inline KernelMatrix overlap_kernel_matrix(const StateFamily &family,
                                          const Vec3 &r, double a,
                                          const QuadratureSpec &q = {}) {
  family.validate();
  if (family.kind == FamilyKind::scalar)
    throw invalid_argument(
        "overlap_kernel_matrix: scalar family has one label, use qm_overlap");
  if (family.frequency != FrequencySign::positive)
    throw unsupported_configuration(
        "overlap_kernel_matrix: positive-frequency families only");
  auto profile = [&](const Direction &dir) { return label_gram(family, dir); };
  const double m = 3.0 - 2.0 * family.weight_exponent;
  return {r, fourier_kernel(profile, detail::spin1_degree, m, r, a, q),
          family.kind, a};
}

/// Fourier transform of (helicity_sum(kept) - I) in the spin-j spherical
/// basis: the defect left in the overlap when only `kept` helicities are
/// present. Zero for the full set.
inline KernelMatrix general_j_defect(int j, const HelicitySet &kept,
                                     const Vec3 &r, double a,
                                     const QuadratureSpec &q = {}) {
  if (j < 1)
    throw unsupported_spin("general_j_defect: spin must be >= 1");
  if (j > default_j_max)
    throw unsupported_spin("general_j_defect: spin above j_max");
  if (!kept.fits_spin(j))
    throw invalid_argument("general_j_defect: helicity outside {-j..j}");
  const int d = 2 * j + 1;
  auto profile = [&](const Direction &dir) {
    Eigen::MatrixXcd g = helicity_sum_matrix(dir, kept, j).entries;
    g -= Eigen::MatrixXcd::Identity(d, d);
    return g;
  };
  return {r, fourier_kernel(profile, 2 * j, 2.0, r, a, q), std::nullopt, a};
}

} // namespace nwloc
