// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nwloc/brute_force.hpp"
#include "nwloc/checks.hpp"
#include "nwloc/overlap.hpp"

using namespace nwloc;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

template <class A, class B> double max_abs(const A &a, const B &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double delta_scale(double a) { return regulated_delta(0.0, a); }

const CheckResult &find(const CheckReport &rep, const std::string &name) {
  for (const CheckResult &c : rep.checks)
    if (c.name == name)
      return c;
  throw consistency_error("missing check " + name);
}

// 1. helicity sum over {-1, +1} against the closed form on a 20 x 20 grid
Outcome closed_form_grid() {
  double worst = 0.0;
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) {
      const Direction d(pi * a / 19.0, 2.0 * pi * b / 20.0);
      const auto m = helicity_sum_matrix(d, HelicitySet::photon(), 1);
      worst = std::max(worst, max_abs(m.entries, CMat3(CMat3::Identity() - obstruction_closed_form(d))));
    }
  CMat3 printed;
  printed << 0.5, 0, 0.5, 0, 1, 0, 0.5, 0, 0.5;
  const double equator =
      max_abs(helicity_sum_matrix(Direction(pi / 2, 0), HelicitySet::photon(), 1).entries, printed);
  return {worst < 1e-12 && equator < 1e-12,
          fmt("grid max residual %.3g, equator residual %.3g (< 1e-12)", worst, equator)};
}

// 2. full-helicity families are diagonal regulated deltas
Outcome completeness() {
  std::mt19937_64 rng(2);
  double off = 0.0, diag = 0.0;
  for (double a : {1.0, 0.5}) {
    for (FamilyKind kind : {FamilyKind::spherical3, FamilyKind::cartesian3}) {
      const StateFamily fam = StateFamily::make(kind);
      const KernelMatrix k0 = overlap_kernel_matrix(fam, Vec3::Zero(), a);
      const double coincidence = k0.entries(0, 0).real();
      for (int i = 0; i < 3; ++i)
        diag = std::max(diag, std::abs(k0.entries(i, i) - delta_scale(a)) / delta_scale(a));
      const Vec3 rhat = random_direction(rng).unit_vector();
      for (double ra : {2.0, 5.0, 10.0}) {
        Eigen::MatrixXcd e = overlap_kernel_matrix(fam, ra * a * rhat, a).entries;
        e.diagonal().setZero();
        off = std::max(off, e.cwiseAbs().maxCoeff() / coincidence);
      }
    }
  }
  return {off < 1e-8 && diag < 1e-6,
          fmt("off-diagonal / coincidence %.3g (< 1e-8), coincidence rel error %.3g (< 1e-6)", off, diag)};
}

// 3. photon defect against the brute-force oracle, and its dipole tail
Outcome photon_defect() {
  const double a = 1.0;
  const StateFamily fam = StateFamily::make(FamilyKind::cartesian_photon);
  const Vec3 rhat = Vec3(1.0, 2.0, 2.0) / 3.0;
  double rel = 0.0, kernel_vs_formula = 0.0;
  for (double ra : {0.0, 1.0, 5.0, 10.0}) {
    const Vec3 r = ra * a * rhat;
    const Eigen::MatrixXcd formula =
        (regulated_delta(r.norm(), a) * Mat3::Identity() - transverse_kernel(r, a)).cast<cdouble>();
    const Eigen::MatrixXcd oracle = brute_force::overlap_kernel_matrix(fam, r, a).entries;
    rel = std::max(rel, max_abs(formula, oracle) / oracle.cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd k = overlap_kernel_matrix(fam, r, a).entries;
    kernel_vs_formula = std::max(kernel_vs_formula,
                                 max_abs(k, formula) / formula.cwiseAbs().maxCoeff());
  }
  const Vec3 r = 10.0 * a * rhat;
  const double rn = r.norm();
  Eigen::MatrixXcd k = overlap_kernel_matrix(fam, r, a).entries;
  const Eigen::MatrixXcd traceless = k - k.trace() / 3.0 * Eigen::MatrixXcd::Identity(3, 3);
  const Mat3 tail = (3.0 * rhat * rhat.transpose() - Mat3::Identity()) / (4.0 * pi * rn * rn * rn);
  const double tail_err = max_abs(traceless, tail.cast<cdouble>()) / tail.cwiseAbs().maxCoeff();
  return {rel < 1e-6 && kernel_vs_formula < 1e-6 && tail_err < 0.02,
          fmt("vs oracle %.3g (< 1e-6), kernel vs formula %.3g, tail at 10a %.3g (< 0.02)", rel,
              kernel_vs_formula, tail_err)};
}

// 4. the label-summed product gives twice the regulated delta
Outcome alternative_product() {
  const double a = 1.0;
  const StateFamily fam = StateFamily::make(FamilyKind::hawton);
  const LocalizedState s0 = make_localized_state(fam, {}, Axis::x, a);
  const double ratio = alt_overlap(s0, s0).real() / delta_scale(a);
  double sep = 0.0;
  for (double ra : {0.5, 1.0, 2.0, 4.0}) {
    const Vec3 x = ra * a * Vec3(0.0, 0.6, 0.8);
    const LocalizedState s = make_localized_state(fam, {0.0, x}, Axis::y, a);
    const double ref = 2.0 * regulated_delta(ra * a, a);
    sep = std::max(sep, std::abs(alt_overlap(s, s0) - ref) / ref);
  }
  return {std::abs(ratio - 2.0) < 1e-6 && sep < 1e-6,
          fmt("coincidence ratio %.9f (2 +- 1e-6), separation rel error %.3g (< 1e-6)", ratio, sep)};
}

// 5. rotation covariance and the spherical/Cartesian conjugation
Outcome covariance() {
  const CheckReport rep = covariance_suite(5, 100);
  double mixing = 0.0;
  for (const char *n : {"spherical3_mixing", "cartesian3_mixing", "spherical-photon_mixing",
                        "cartesian-photon_mixing", "hawton_mixing"})
    mixing = std::max(mixing, find(rep, n).residual);
  const double conj = find(rep, "spherical_cartesian_conjugation").residual;
  return {mixing < 1e-10 && conj < 1e-12,
          fmt("100 rotations: mixing residual %.3g (< 1e-10), conjugation %.3g (< 1e-12)", mixing, conj)};
}

// 6. Wigner angle composition
Outcome wigner_angle_check() {
  const CheckReport rep = covariance_suite(6, 100);
  const double fz = find(rep, "wigner_angle_fixes_z").residual;
  const double rc = find(rep, "wigner_angle_reconstruction").residual;
  return {fz < 1e-12 && rc < 1e-12,
          fmt("100 (R, k): fixes z %.3g, reconstruction %.3g (< 1e-12)", fz, rc)};
}

// 7. gauge sector
Outcome gauge() {
  const CheckReport rep = gauge_suite(7);
  const double l = std::max(find(rep, "lorentz_condition").residual,
                            find(rep, "lorentz_condition_after_shift").residual);
  const double f = find(rep, "field_strength_invariance").residual;
  const double n = find(rep, "polarization_unit_norm").residual;
  return {l < 1e-12 && f < 1e-12 && n < 1e-12,
          fmt("Lorentz %.3g, field strength %.3g, |e|^2 - 1 %.3g (< 1e-12)", l, f, n)};
}

// 8. translation re-anchoring and the negative-frequency sign flip
Outcome translation() {
  const CheckReport rep = translation_suite(8);
  const double p = std::max(find(rep, "positive_frequency_at_x_plus_a").residual,
                            find(rep, "translation_phase").residual);
  const CheckResult &neg = find(rep, "negative_frequency_at_x_minus_a");
  const CheckResult &flip = find(rep, "negative_frequency_not_at_x_plus_a");
  return {p < 1e-14 && neg.residual < 1e-14 && flip.passed,
          fmt("x + a %.3g, negative at x - a %.3g (< 1e-14), distance from x + a %.3g (sign flip)", p,
              neg.residual, flip.residual)};
}

// 9. spin-2 defect with only {-1, +1} kept
Outcome general_j() {
  const double a = 1.0;
  const double frob = general_j_defect(2, HelicitySet::photon(), Vec3::Zero(), a).entries.norm() /
                      delta_scale(a);
  const double full = general_j_defect(2, HelicitySet::full(2), Vec3::Zero(), a).entries.norm() /
                      delta_scale(a);
  return {frob > 0.1 && full < 1e-10,
          fmt("missing {-2, 0, 2}: %.6g (> 0.1), full set %.3g (< 1e-10), in delta-scale units", frob,
              full)};
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"helicity-sum closed form", closed_form_grid},
      {"completeness of full helicity sets", completeness},
      {"photon localization defect", photon_defect},
      {"alternative product factor two", alternative_product},
      {"rotation covariance", covariance},
      {"Wigner angle", wigner_angle_check},
      {"gauge sector", gauge},
      {"translation behaviour", translation},
      {"general-j defect", general_j},
  };
  int failed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::printf("%s %zu %s: %s\n", o.passed ? "PASS" : "FAIL", n + 1, criteria[n].first,
                o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), secs);
  return failed ? 1 : 0;
}
