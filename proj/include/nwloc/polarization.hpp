#pragma once
// Radiation-gauge polarization vectors, the k-proportional gauge shift,
// momentum-space field strengths and the helicity-sum (obstruction)
// matrices built from standard-rotation D-matrices.
#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "nwloc/errors.hpp"
#include "nwloc/rotations.hpp"

namespace nwloc {

using Vec4 = Eigen::Vector4d;
using CVec4 = Eigen::Vector4cd;
using CMat4 = Eigen::Matrix4cd;

enum class Axis { x = 0, y = 1, z = 2 };

inline constexpr int axis_index(Axis a) { return static_cast<int>(a); }

enum class GaugeTag { radiation, transformed };

/// Conjugate polarization e*^mu(k, lambda) in (t, x, y, z) order: the
/// coefficient with which |k, lambda> enters a localized superposition.
struct PolarizationVector {
  CVec4 components = CVec4::Zero();
  int helicity = 0;
  Direction direction;
  GaugeTag gauge = GaugeTag::radiation;

  CVec3 spatial() const { return components.tail<3>(); }
};

/// Subset of {-j..j}, kept sorted and free of duplicates.
class HelicitySet {
public:
  HelicitySet() = default;
  HelicitySet(std::initializer_list<int> values)
      : HelicitySet(std::vector<int>(values)) {}
  explicit HelicitySet(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty())
      throw invalid_argument("HelicitySet: must be non-empty");
  }

  static HelicitySet photon() { return {-1, 1}; }
  static HelicitySet full(int j) {
    std::vector<int> v;
    for (int m = j; m >= -j; --m)
      v.push_back(m);
    return HelicitySet(std::move(v));
  }

  /// Values in descending order.
  const std::vector<int> &values() const { return values_; }
  bool contains(int lambda) const {
    return std::find(values_.begin(), values_.end(), lambda) != values_.end();
  }
  bool fits_spin(int j) const {
    return std::all_of(values_.begin(), values_.end(),
                       [j](int m) { return m >= -j && m <= j; });
  }
  bool operator==(const HelicitySet &) const = default;

private:
  std::vector<int> values_;
};

struct ObstructionMatrix {
  int j = 1;
  Eigen::MatrixXcd entries;
};

/// Minkowski product with signature (+,-,-,-), no complex conjugation.
inline cdouble minkowski_dot(const CVec4 &a, const CVec4 &b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

inline Vec4 null_momentum(double omega, const Direction &dir) {
  Vec4 k;
  k << 1.0, dir.unit_vector();
  return omega * k;
}

inline PolarizationVector polarization_vector(const Direction &dir,
                                              int lambda) {
  if (lambda < -1 || lambda > 1)
    throw invalid_helicity("polarization_vector: helicity must be -1, 0 or +1");
  // rows of <sigma|i> are the z-axis conjugate polarizations
  const CVec3 along_z =
      spherical_to_cartesian().row(WignerDMatrix::index(1, lambda)).transpose();
  PolarizationVector pol;
  pol.components(0) = 0.0;
  pol.components.tail<3>() = standard_rotation(dir).cast<cdouble>() * along_z;
  pol.helicity = lambda;
  pol.direction = dir;
  pol.gauge = GaugeTag::radiation;
  return pol;
}

inline cdouble lorentz_condition(const PolarizationVector &pol, double omega) {
  return minkowski_dot(null_momentum(omega, pol.direction).cast<cdouble>(),
                       pol.components);
}

/// e -> e + g k with k = omega (1, k-hat).
inline PolarizationVector gauge_transform(const PolarizationVector &pol,
                                          double omega, cdouble g) {
  if (!(omega > 0.0))
    throw invalid_argument("gauge_transform: omega must be positive");
  PolarizationVector out = pol;
  out.components += g * null_momentum(omega, pol.direction).cast<cdouble>();
  out.gauge = GaugeTag::transformed;
  return out;
}

/// F^{mu nu} = k^mu e^nu - k^nu e^mu.
inline CMat4 field_strength(double omega, const Direction &dir,
                            const PolarizationVector &pol) {
  if (!(omega > 0.0))
    throw invalid_argument("field_strength: omega must be positive");
  const CVec4 k = null_momentum(omega, dir).cast<cdouble>();
  return k * pol.components.transpose() - pol.components * k.transpose();
}

/// sum over lambda in the set of R_{sigma1 lambda}[k] R^-1_{lambda sigma2}[k].
inline ObstructionMatrix helicity_sum_matrix(const Direction &dir,
                                             const HelicitySet &helicities,
                                             int j) {
  if (j < 0)
    throw unsupported_spin("helicity_sum_matrix: negative spin");
  if (!helicities.fits_spin(j))
    throw invalid_argument("helicity_sum_matrix: helicity outside {-j..j}");
  const WignerDMatrix D = wigner_D(j, standard_rotation(dir));
  const int d = D.dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (int lambda : helicities.values()) {
    const auto col = D.entries.col(WignerDMatrix::index(j, lambda));
    sum += col * col.adjoint();
  }
  return {j, sum};
}

/// The missing-zero-helicity projector in closed form (sigma = +1, 0, -1).
inline CMat3 obstruction_closed_form(const Direction &dir) {
  const double s = std::sin(dir.theta()), c = std::cos(dir.theta());
  const cdouble e1 = std::polar(1.0, -dir.phi());
  const cdouble e2 = std::polar(1.0, -2.0 * dir.phi());
  const double r2 = std::sqrt(2.0);
  CMat3 M;
  M << 0.5 * s * s, -e1 * s * c / r2, -0.5 * e2 * s * s,
       -std::conj(e1) * s * c / r2, c * c, e1 * s * c / r2,
       -0.5 * std::conj(e2) * s * s, std::conj(e1) * s * c / r2, 0.5 * s * s;
  return M;
}

/// sum over lambda = +-1 of e^{i1}(k, lambda) e*^{i2}(k, lambda).
inline cdouble transverse_outer_product(const Direction &dir, Axis i1,
                                        Axis i2) {
  cdouble sum = 0.0;
  for (int lambda : {1, -1}) {
    const CVec3 e_conj = polarization_vector(dir, lambda).spatial();
    sum += std::conj(e_conj(axis_index(i1))) * e_conj(axis_index(i2));
  }
  return sum;
}

inline CMat3 transverse_outer_matrix(const Direction &dir) {
  CMat3 m;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      m(a, b) = transverse_outer_product(dir, Axis(a), Axis(b));
  return m;
}

} // namespace nwloc
