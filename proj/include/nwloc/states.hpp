#pragma once
/**
 * Candidate localized states as closed-form momentum-space amplitudes.
 *
 * A state is |s> = int d^3k sum_lambda c(k, lambda) |k, lambda> with
 *
 *   c(k, lambda) = (2 pi)^{-3/2} omega^{-p} e^{+-i k.x} e^{-a^2 |k|^2 / 2}
 *                  sum_l coeff_l(k-hat, lambda) mixing_l
 *
 * where p is the family's weight exponent, l runs over the family's
 * labels (sigma = +1, 0, -1 or i = x, y, z) and `mixing` starts as the
 * unit vector of the state's label. Rotations act on (x, mixing) only; the
 * regulator width a is rotation invariant.
 */
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "nwloc/errors.hpp"
#include "nwloc/polarization.hpp"
#include "nwloc/rotations.hpp"

namespace nwloc {

enum class FamilyKind {
  scalar,
  spherical3,
  cartesian3,
  spherical_photon,
  cartesian_photon,
  hawton,
};

enum class FrequencySign { positive, negative };

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
  case FamilyKind::scalar: return "scalar";
  case FamilyKind::spherical3: return "spherical3";
  case FamilyKind::cartesian3: return "cartesian3";
  case FamilyKind::spherical_photon: return "spherical-photon";
  case FamilyKind::cartesian_photon: return "cartesian-photon";
  case FamilyKind::hawton: return "hawton";
  }
  return "?";
}

inline FamilyKind parse_family(std::string_view name) {
  for (FamilyKind k :
       {FamilyKind::scalar, FamilyKind::spherical3, FamilyKind::cartesian3,
        FamilyKind::spherical_photon, FamilyKind::cartesian_photon,
        FamilyKind::hawton})
    if (to_string(k) == name)
      return k;
  throw invalid_argument("unknown state family '" + std::string(name) + "'");
}

inline bool is_spherical(FamilyKind k) {
  return k == FamilyKind::spherical3 || k == FamilyKind::spherical_photon;
}
inline bool is_cartesian(FamilyKind k) {
  return k == FamilyKind::cartesian3 || k == FamilyKind::cartesian_photon ||
         k == FamilyKind::hawton;
}
inline int label_count(FamilyKind k) { return k == FamilyKind::scalar ? 1 : 3; }

struct StateFamily {
  FamilyKind kind = FamilyKind::scalar;
  double weight_exponent = 0.5;
  HelicitySet helicities{0};
  FrequencySign frequency = FrequencySign::positive;

  static StateFamily make(FamilyKind kind,
                          FrequencySign sign = FrequencySign::positive) {
    StateFamily f;
    f.kind = kind;
    f.frequency = sign;
    switch (kind) {
    case FamilyKind::scalar:
      f.helicities = HelicitySet{0};
      break;
    case FamilyKind::spherical3:
    case FamilyKind::cartesian3:
      f.helicities = HelicitySet::full(1);
      break;
    case FamilyKind::spherical_photon:
    case FamilyKind::cartesian_photon:
      f.helicities = HelicitySet::photon();
      break;
    case FamilyKind::hawton:
      f.helicities = HelicitySet::photon();
      f.weight_exponent = 1.0;
      break;
    }
    return f;
  }

  /// Throws unless (kind, weight_exponent, helicities) match the definition.
  void validate() const {
    const StateFamily ref = make(kind, frequency);
    if (weight_exponent != ref.weight_exponent || !(helicities == ref.helicities))
      throw invalid_argument("StateFamily: inconsistent definition for " +
                             std::string(to_string(kind)));
  }
};

struct SpacetimePoint {
  double t = 0.0;
  Vec3 x = Vec3::Zero();
};

struct SphericalLabel {
  int sigma = 0;
};

using Label = std::variant<std::monostate, SphericalLabel, Axis>;

struct LocalizedState {
  StateFamily family;
  SpacetimePoint x;
  Label label;
  double regulator_width = 1.0;
  Eigen::VectorXcd mixing;
};

/// Per-label coefficients coeff_l(k-hat, lambda) before mixing; zero for
/// helicities outside the family.
inline Eigen::VectorXcd label_coefficients(const StateFamily &family,
                                           const Direction &dir, int lambda) {
  const int n = label_count(family.kind);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
  if (!family.helicities.contains(lambda))
    return c;
  if (family.kind == FamilyKind::scalar) {
    c(0) = 1.0;
  } else if (is_spherical(family.kind)) {
    // R^-1_{lambda sigma}[k] = conj(D_{sigma lambda}(R0[k]))
    const WignerDMatrix D = wigner_D(1, standard_rotation(dir));
    c = D.entries.col(WignerDMatrix::index(1, lambda)).conjugate();
  } else {
    c = polarization_vector(dir, lambda).spatial();
  }
  return c;
}

inline Eigen::VectorXcd unit_mixing(FamilyKind kind, const Label &label) {
  Eigen::VectorXcd m = Eigen::VectorXcd::Zero(label_count(kind));
  if (kind == FamilyKind::scalar) {
    if (!std::holds_alternative<std::monostate>(label))
      throw invalid_argument("scalar family takes no label");
    m(0) = 1.0;
  } else if (is_spherical(kind)) {
    const auto *s = std::get_if<SphericalLabel>(&label);
    if (!s)
      throw invalid_argument("spherical family requires a sigma label");
    if (s->sigma < -1 || s->sigma > 1)
      throw invalid_argument("sigma label must be -1, 0 or +1");
    m(WignerDMatrix::index(1, s->sigma)) = 1.0;
  } else {
    const auto *a = std::get_if<Axis>(&label);
    if (!a)
      throw invalid_argument("Cartesian family requires an axis label");
    m(axis_index(*a)) = 1.0;
  }
  return m;
}

inline LocalizedState make_localized_state(const StateFamily &family,
                                           const SpacetimePoint &x,
                                           const Label &label, double a) {
  family.validate();
  if (!(a > 0.0) || !std::isfinite(a))
    throw invalid_argument("make_localized_state: regulator width must be > 0");
  return {family, x, label, a, unit_mixing(family.kind, label)};
}

/// sum_l coeff_l(k-hat, lambda) mixing_l.
inline cdouble direction_profile(const LocalizedState &s, const Direction &dir,
                                 int lambda) {
  return label_coefficients(s.family, dir, lambda).cwiseProduct(s.mixing).sum();
}

/// k.x = omega t - k.x with omega = |k|.
inline double phase_argument(const Vec3 &k, const SpacetimePoint &x) {
  return k.norm() * x.t - k.dot(x.x);
}

inline cdouble momentum_amplitude(const LocalizedState &s, const Vec3 &k,
                                  int lambda) {
  const double omega = k.norm();
  if (!(omega > 0.0))
    throw undefined_direction("momentum_amplitude: k = 0 has no direction");
  if (!s.family.helicities.contains(lambda))
    return 0.0;
  const double sign = s.family.frequency == FrequencySign::positive ? 1.0 : -1.0;
  const double norm = std::pow(2.0 * pi, -1.5) *
                      std::pow(omega, -s.family.weight_exponent) *
                      std::exp(-0.5 * s.regulator_width * s.regulator_width *
                               omega * omega);
  return norm * std::polar(1.0, sign * phase_argument(k, s.x)) *
         direction_profile(s, Direction::from_vector(k), lambda);
}

inline LocalizedState rotate_state(const LocalizedState &s,
                                   const RotationMatrix &R) {
  LocalizedState out = s;
  out.x.x = R * s.x.x;
  if (is_spherical(s.family.kind))
    out.mixing = wigner_D(1, R).entries * s.mixing;
  else if (is_cartesian(s.family.kind))
    out.mixing = R.cast<cdouble>() * s.mixing;
  return out;
}

/// Applies U(T(a)), i.e. multiplies amplitudes by e^{i k.a}. A positive-
/// frequency state moves to x + a; a negative-frequency one to x - a.
inline LocalizedState translate_state(const LocalizedState &s,
                                      const SpacetimePoint &a) {
  const double sign = s.family.frequency == FrequencySign::positive ? 1.0 : -1.0;
  LocalizedState out = s;
  out.x.t += sign * a.t;
  out.x.x += sign * a.x;
  return out;
}

} // namespace nwloc
