#include <gtest/gtest.h>

#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <cmath>

#include "nwloc/bessel.hpp"
#include "nwloc/overlap.hpp"
#include "nwloc/quadrature.hpp"

using namespace nwloc;

namespace {

// int_0^inf k^m e^{-a^2 k^2} j_l(k r) dk via Kummer's transformation,
// M(A, B, -z) = e^{-z} M(B - A, B, z), which keeps the series positive.
double radial_moment_closed_form(int l, double m, double r, double a) {
  const double mu = m + 1.0;
  const double A = 0.5 * (mu + l), B = l + 1.5;
  const double z = r * r / (4 * a * a);
  const double hyp = std::exp(-z) * boost::math::hypergeometric_1F1(B - A, B, z);
  return std::sqrt(pi) / std::pow(2.0, l + 2) * std::pow(r, l) /
         std::pow(a, mu + l) * std::tgamma(A) / std::tgamma(B) * hyp;
}

} // namespace

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n : {4, 7, 16, 64, 256}) {
    const QuadratureRule r = gauss_legendre(n, 0.0, 2.0);
    double wsum = 0.0;
    for (double w : r.weights)
      wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-13);
    const int deg = std::min(2 * n - 1, 30);
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
      s += r.weights[i] * std::pow(r.nodes[i], deg);
    EXPECT_NEAR(s / (std::pow(2.0, deg + 1) / (deg + 1)), 1.0, 1e-12) << n;
  }
}

TEST(GaussLegendre, NodesNamedInTables) {
  const QuadratureRule r = gauss_legendre(3);
  EXPECT_NEAR(r.nodes[0], -0.7745966692414834, 1e-15);
  EXPECT_NEAR(r.nodes[1], 0.0, 1e-15);
  EXPECT_NEAR(r.weights[1], 8.0 / 9.0, 1e-15);
}

TEST(GaussLaguerre, GammaMoments) {
  for (double alpha : {0.0, 0.5, 1.5, 3.0, 10.5}) {
    const QuadratureRule r = gauss_laguerre(64, alpha);
    for (int k = 0; k <= 12; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i)
        s += r.weights[i] * std::pow(r.nodes[i], k);
      EXPECT_NEAR(s / std::tgamma(alpha + k + 1.0), 1.0, 1e-11)
          << "alpha=" << alpha << " k=" << k;
    }
  }
  EXPECT_THROW(gauss_laguerre(8, -1.0), nwloc::invalid_argument);
}

TEST(QuadratureSpec, Validation) {
  QuadratureSpec q;
  EXPECT_NO_THROW(q.validate());
  q.n_phi = 3;
  EXPECT_THROW(q.validate(), nwloc::invalid_argument);
  q = {};
  q.rel_tol = 0.0;
  EXPECT_THROW(q.validate(), nwloc::invalid_argument);
  const QuadratureSpec r = QuadratureSpec{}.refined(4);
  EXPECT_EQ(r.n_theta, 128);
  EXPECT_EQ(r.n_radial, 256);
}

TEST(SphericalBessel, AgreesWithStandardLibrary) {
  for (double x : {1e-6, 1e-3, 0.2, 0.9, 1.0, 3.0, 7.5, 12.0, 30.0, 80.0, 150.0}) {
    const auto js = sph_bessel_all(25, x);
    for (int l = 0; l <= 25; ++l) {
      const double ref = std::sph_bessel(l, x);
      // values under ~1e-290 are dominated by the library's own underflow
      if (std::abs(ref) < 1e-290)
        continue;
      // j_l is bounded by 1/x; upward recurrence loses a few ulps of that
      EXPECT_NEAR(js[l], ref, 1e-13 * std::abs(ref) + 1e-12 / std::max(1.0, x))
          << "l=" << l << " x=" << x;
    }
  }
}

TEST(SphericalBessel, ScaledFormIsFiniteAtOrigin) {
  EXPECT_DOUBLE_EQ(sph_bessel_scaled(0, 0.0), 1.0);
  EXPECT_NEAR(sph_bessel_scaled(2, 0.0), 1.0 / 15.0, 1e-17);
  for (double x : {0.3, 0.49, 0.51, 2.0})
    for (int l = 0; l <= 6; ++l)
      EXPECT_NEAR(sph_bessel_scaled(l, x) * std::pow(x, l), std::sph_bessel(l, x),
                  1e-15);
}

TEST(SphericalBessel, NegativeOrderRejected) {
  EXPECT_THROW(sph_bessel_all(-1, 1.0), nwloc::invalid_argument);
}

TEST(RadialMoment, MatchesHypergeometricClosedForm) {
  QuadratureSpec q;
  for (double m : {1.0, 2.0})
    for (int l : {0, 1, 2, 3, 4})
      for (double r : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 28.0}) {
        const double a = 0.7;
        const double ref = radial_moment_closed_form(l, m, r, a);
        const double got = radial_moment(l, m, r, a, q);
        // absolute scale: the l = 0, r = 0 moment
        const double scale = radial_moment_closed_form(0, m, 0.0, a);
        EXPECT_NEAR(got, ref, 1e-12 * scale) << "m=" << m << " l=" << l << " r=" << r;
      }
}

TEST(RadialMoment, AdaptiveRuleAgrees) {
  QuadratureSpec gw, ad;
  ad.radial = RadialRule::adaptive;
  for (int l : {0, 2})
    for (double r : {0.0, 1.0, 4.0}) {
      const double scale = radial_moment_closed_form(0, 2.0, 0.0, 1.0);
      EXPECT_NEAR(radial_moment(l, 2.0, r, 1.0, ad),
                  radial_moment(l, 2.0, r, 1.0, gw), 1e-9 * scale);
    }
}

TEST(AngularGrid, WeightsIntegrateSphere) {
  const AngularGrid g = angular_grid(8, 9);
  double s = 0.0, z2 = 0.0;
  for (std::size_t n = 0; n < g.directions.size(); ++n) {
    s += g.weights[n];
    const double z = g.directions[n].unit_vector().z();
    z2 += g.weights[n] * z * z;
  }
  EXPECT_NEAR(s, 4 * pi, 1e-13);
  EXPECT_NEAR(z2, 4 * pi / 3, 1e-13);
}
