#pragma once
/**
 * Seeded invariant suites: rotation covariance, gauge sector, translation
 * behaviour and the label-summed alternative product. Each check reports
 * its worst residual against a tolerance. A check with `at_least` set
 * passes when the residual is *above* the tolerance (used to assert that
 * something differs).
 */
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "nwloc/overlap.hpp"
#include "nwloc/sampling.hpp"
#include "nwloc/states.hpp"

namespace nwloc {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
  bool at_least = false;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed; });
  }
};

namespace detail {

inline CheckResult at_most(std::string name, double residual, double tol,
                           std::string note = {}) {
  return {std::move(name), residual, tol, residual <= tol, std::move(note), false};
}

inline CheckResult at_least(std::string name, double residual, double tol,
                            std::string note = {}) {
  return {std::move(name), residual, tol, residual >= tol, std::move(note), true};
}

template <class A, class B> double max_abs(const A &a, const B &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Cell-centred n^3 grid on [-kmax, kmax]^3; never hits k = 0 for even n.
inline std::vector<Vec3> cube_grid(int n, double kmax) {
  std::vector<Vec3> ks;
  ks.reserve(static_cast<std::size_t>(n) * n * n);
  auto at = [&](int i) { return -kmax + 2.0 * kmax * (i + 0.5) / n; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        ks.emplace_back(at(a), at(b), at(c));
  return ks;
}

inline Label first_label(FamilyKind kind) {
  if (kind == FamilyKind::scalar)
    return std::monostate{};
  if (is_spherical(kind))
    return SphericalLabel{1};
  return Axis::x;
}

inline Eigen::VectorXcd random_mixing(std::mt19937_64 &rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i)
    v(i) = cdouble(g(rng), g(rng));
  return v / v.norm();
}

// max over k, lambda of |c'(Rk, lambda) - e^{-i lambda w} c(k, lambda)|
inline double helicity_covariance_residual(const LocalizedState &s,
                                           const RotationMatrix &R,
                                           std::mt19937_64 &rng, int n_k) {
  const LocalizedState rs = rotate_state(s, R);
  double worst = 0.0;
  for (int n = 0; n < n_k; ++n) {
    const Direction d = random_direction(rng);
    std::uniform_real_distribution<double> kn(0.2, 3.0);
    const Vec3 k = kn(rng) * d.unit_vector();
    const double w = wigner_angle(R, d).radians;
    for (int lambda : {1, 0, -1}) {
      const cdouble lhs = momentum_amplitude(rs, R * k, lambda);
      const cdouble rhs = std::polar(1.0, -lambda * w) * momentum_amplitude(s, k, lambda);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

} // namespace detail

/// Rotation covariance of every family, D-matrix algebra, the
/// spherical/Cartesian conjugation and the Wigner-angle composition.
inline CheckReport covariance_suite(std::uint64_t seed, int n_rotations = 100) {
  std::mt19937_64 rng(seed);
  CheckReport rep{"covariance", seed, {}};
  const FamilyKind kinds[] = {FamilyKind::spherical3, FamilyKind::cartesian3,
                              FamilyKind::spherical_photon, FamilyKind::cartesian_photon,
                              FamilyKind::hawton};
  double mixing[5] = {0, 0, 0, 0, 0};
  double homomorphism = 0.0, unitarity = 0.0, conjugation = 0.0;
  double fixes_z = 0.0, reconstruction = 0.0;
  const CMat3 C = spherical_to_cartesian();
  for (int n = 0; n < n_rotations; ++n) {
    const RotationMatrix R = random_rotation(rng), R2 = random_rotation(rng);
    for (int f = 0; f < 5; ++f) {
      LocalizedState s = make_localized_state(StateFamily::make(kinds[f]),
                                              {0.0, random_vector(rng, 2.0)},
                                              detail::first_label(kinds[f]), 0.8);
      s.mixing = detail::random_mixing(rng, static_cast<int>(s.mixing.size()));
      mixing[f] = std::max(mixing[f], detail::helicity_covariance_residual(s, R, rng, 4));
    }
    for (int j = 1; j <= 3; ++j) {
      const auto D1 = wigner_D(j, R), D2 = wigner_D(j, R2), D12 = wigner_D(j, R * R2);
      homomorphism = std::max(homomorphism, detail::max_abs(D12.entries, D1.entries * D2.entries));
      const int dim = 2 * j + 1;
      unitarity = std::max(unitarity, detail::max_abs(D1.entries.adjoint() * D1.entries,
                                                      Eigen::MatrixXcd::Identity(dim, dim)));
    }
    const CMat3 D = wigner_D(1, R).entries;
    conjugation = std::max(conjugation,
                           detail::max_abs(CMat3(C.adjoint() * D * C), R.cast<cdouble>()));
    const Direction d = random_direction(rng);
    const double w = wigner_angle(R, d).radians;
    const Mat3 little = standard_rotation(Direction::from_vector(R * d.unit_vector())).transpose() *
                        R * standard_rotation(d);
    fixes_z = std::max(fixes_z, (little * Vec3::UnitZ() - Vec3::UnitZ()).cwiseAbs().maxCoeff());
    reconstruction = std::max(reconstruction,
                              detail::max_abs(rotation_from_axis_angle(Vec3::UnitZ(), w), little));
  }
  for (int f = 0; f < 5; ++f)
    rep.checks.push_back(detail::at_most(std::string(to_string(kinds[f])) + "_mixing",
                                         mixing[f], 1e-10,
                                         "rotated amplitude vs e^{-i lambda w} phase"));
  rep.checks.push_back(detail::at_most("wigner_D_homomorphism", homomorphism, 1e-10, "j = 1..3"));
  rep.checks.push_back(detail::at_most("wigner_D_unitarity", unitarity, 1e-12, "j = 1..3"));
  rep.checks.push_back(detail::at_most("spherical_cartesian_conjugation", conjugation, 1e-12,
                                       "C^dagger D C vs R"));
  rep.checks.push_back(detail::at_most("wigner_angle_fixes_z", fixes_z, 1e-12));
  rep.checks.push_back(detail::at_most("wigner_angle_reconstruction", reconstruction, 1e-12,
                                       "rotation about z through w"));
  return rep;
}

/// Lorentz condition, field-strength invariance and unit norm of the
/// polarization vectors under random gauge shifts.
inline CheckReport gauge_suite(std::uint64_t seed, int n_samples = 200) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0), w(0.1, 5.0);
  CheckReport rep{"gauge", seed, {}};
  double lorentz = 0.0, lorentz_shifted = 0.0, field = 0.0, norm = 0.0, transverse = 0.0;
  for (int n = 0; n < n_samples; ++n) {
    const Direction d = random_direction(rng);
    const double omega = w(rng);
    const cdouble g(u(rng), u(rng));
    for (int lambda : {1, -1}) {
      const PolarizationVector p = polarization_vector(d, lambda);
      const PolarizationVector q = gauge_transform(p, omega, g);
      lorentz = std::max(lorentz, std::abs(lorentz_condition(p, omega)));
      lorentz_shifted = std::max(lorentz_shifted, std::abs(lorentz_condition(q, omega)));
      field = std::max(field, detail::max_abs(field_strength(omega, d, p),
                                              field_strength(omega, d, q)));
      const CVec3 e = p.spatial();
      norm = std::max(norm, std::abs(e.dot(e) - 1.0));
      transverse = std::max(transverse, std::abs(d.unit_vector().cast<cdouble>().dot(e)));
    }
  }
  rep.checks.push_back(detail::at_most("lorentz_condition", lorentz, 1e-12, "radiation gauge"));
  rep.checks.push_back(detail::at_most("lorentz_condition_after_shift", lorentz_shifted, 1e-12,
                                       "epsilon -> epsilon + g k"));
  rep.checks.push_back(detail::at_most("field_strength_invariance", field, 1e-12));
  rep.checks.push_back(detail::at_most("polarization_unit_norm", norm, 1e-12));
  rep.checks.push_back(detail::at_most("polarization_transverse", transverse, 1e-12));
  return rep;
}

/// Translation re-anchoring on a 10^3 momentum grid. Positive-frequency
/// states land at x + a; negative-frequency fixtures land at x - a.
inline CheckReport translation_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckReport rep{"translation", seed, {}};
  const std::vector<Vec3> grid = detail::cube_grid(10, 3.0);
  double pos = 0.0, neg = 0.0, composition = 0.0, phase = 0.0;
  double neg_vs_plus = std::numeric_limits<double>::infinity();
  const FamilyKind kinds[] = {FamilyKind::scalar, FamilyKind::spherical3,
                              FamilyKind::cartesian_photon};
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  for (FamilyKind kind : kinds) {
    for (FrequencySign sign : {FrequencySign::positive, FrequencySign::negative}) {
      const StateFamily fam = StateFamily::make(kind, sign);
      const Label label = detail::first_label(kind);
      const SpacetimePoint x0{ut(rng), random_vector(rng, 1.0)};
      const SpacetimePoint a{ut(rng), random_vector(rng, 1.0)};
      const SpacetimePoint b{ut(rng), random_vector(rng, 1.0)};
      const LocalizedState s = make_localized_state(fam, x0, label, 1.0);
      const LocalizedState moved = translate_state(s, a);
      const LocalizedState at_plus =
          make_localized_state(fam, {x0.t + a.t, x0.x + a.x}, label, 1.0);
      const LocalizedState at_minus =
          make_localized_state(fam, {x0.t - a.t, x0.x - a.x}, label, 1.0);
      const LocalizedState twice = translate_state(moved, b);
      const LocalizedState once = translate_state(s, {a.t + b.t, a.x + b.x});
      double to_plus = 0.0, to_minus = 0.0;
      for (const Vec3 &k : grid)
        for (int lambda : {1, 0, -1}) {
          const cdouble c = momentum_amplitude(moved, k, lambda);
          to_plus = std::max(to_plus, std::abs(c - momentum_amplitude(at_plus, k, lambda)));
          to_minus = std::max(to_minus, std::abs(c - momentum_amplitude(at_minus, k, lambda)));
          // U(T(a)) multiplies every amplitude by e^{i k.a} whatever the sign
          const cdouble u = std::polar(1.0, phase_argument(k, a));
          phase = std::max(phase, std::abs(c - u * momentum_amplitude(s, k, lambda)));
          composition = std::max(composition, std::abs(momentum_amplitude(twice, k, lambda) -
                                                       momentum_amplitude(once, k, lambda)));
        }
      if (sign == FrequencySign::positive) {
        pos = std::max(pos, to_plus);
      } else {
        neg = std::max(neg, to_minus);
        neg_vs_plus = std::min(neg_vs_plus, to_plus);
      }
    }
  }
  rep.checks.push_back(detail::at_most("positive_frequency_at_x_plus_a", pos, 1e-14,
                                       "amplitude error on a 10^3 k-grid"));
  rep.checks.push_back(detail::at_most("negative_frequency_at_x_minus_a", neg, 1e-14,
                                       "negative frequencies translate the wrong way"));
  rep.checks.push_back(detail::at_least("negative_frequency_not_at_x_plus_a", neg_vs_plus, 1e-3,
                                        "sign flip asserted: residual must exceed tolerance"));
  rep.checks.push_back(detail::at_most("translation_phase", phase, 1e-14,
                                       "amplitude times e^{i k.a}"));
  rep.checks.push_back(detail::at_most("translation_composition", composition, 1e-14,
                                       "T(b) T(a) = T(a + b)"));
  return rep;
}

/// The label-summed alternative product against twice the regulated delta,
/// and its unsummed integrand against the transverse projector.
inline CheckReport alt_product_suite(std::uint64_t seed, const QuadratureSpec &q = {}) {
  std::mt19937_64 rng(seed);
  CheckReport rep{"alt-product", seed, {}};
  const double a = 1.0;
  const StateFamily fam = StateFamily::make(FamilyKind::hawton);
  const LocalizedState s0 = make_localized_state(fam, {}, Axis::x, a);
  const double ratio = alt_overlap(s0, s0, q).real() / regulated_delta(0.0, a);
  char buf[64];
  std::snprintf(buf, sizeof buf, "coincidence ratio %.6f", ratio);
  rep.checks.push_back(detail::at_most("coincidence_ratio", std::abs(ratio - 2.0), 1e-6, buf));

  double sep = 0.0;
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    const Vec3 x = r * a * random_direction(rng).unit_vector();
    const LocalizedState s = make_localized_state(fam, {0.0, x}, Axis::z, a);
    const double ref = 2.0 * regulated_delta(r * a, a);
    sep = std::max(sep, std::abs(alt_overlap(s, s0, q) - ref) / ref);
  }
  rep.checks.push_back(detail::at_most("separation_twice_gaussian", sep, 1e-6,
                                       "relative, r/a in {0.5, 1, 2, 3}"));

  double projector = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Direction d = random_direction(rng);
    const Vec3 u = d.unit_vector();
    projector = std::max(projector, detail::max_abs(transverse_outer_matrix(d),
                                                    (Mat3::Identity() - u * u.transpose()).cast<cdouble>()));
  }
  rep.checks.push_back(detail::at_most("unsummed_integrand_transverse", projector, 1e-13,
                                       "sum_lambda e_i e*_j = delta_ij - k_i k_j"));

  // the label-resolved quantum-mechanical kernel is not diagonal off coincidence
  const KernelMatrix k = overlap_kernel_matrix(fam, Vec3(1.0, 0.0, 1.0) * a, a, q);
  rep.checks.push_back(detail::at_least("qm_kernel_offdiagonal", std::abs(k.entries(0, 2)) /
                                                                     regulated_delta(0.0, a),
                                        1e-3, "relative to delta scale; i1 = x, i2 = z"));
  return rep;
}

inline const std::vector<std::string> &check_suite_names() {
  static const std::vector<std::string> names{"covariance", "gauge", "translation",
                                              "alt-product"};
  return names;
}

/// Throws invalid_argument on an unknown suite name.
inline CheckReport run_check_suite(const std::string &suite, std::uint64_t seed,
                                   const QuadratureSpec &q = {}) {
  if (suite == "covariance")
    return covariance_suite(seed);
  if (suite == "gauge")
    return gauge_suite(seed);
  if (suite == "translation")
    return translation_suite(seed);
  if (suite == "alt-product")
    return alt_product_suite(seed, q);
  throw invalid_argument("unknown check suite: " + suite);
}

} // namespace nwloc
