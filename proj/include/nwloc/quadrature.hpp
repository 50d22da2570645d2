#pragma once
/**
 * One-dimensional Gauss rules and the quadrature configuration shared by
 * the overlap engine and the brute-force oracle.
 *
 *  - gauss_legendre(n, lo, hi): Newton iteration on P_n from Chebyshev
 *    initial guesses.
 *  - gauss_laguerre(n, alpha): nodes/weights for u^alpha e^{-u} on
 *    [0, inf), Golub-Welsch on the Jacobi matrix.
 */
#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "nwloc/errors.hpp"
#include "nwloc/rotations.hpp"

namespace nwloc {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

inline QuadratureRule gauss_legendre(int n, double lo = -1.0,
                                     double hi = 1.0) {
  if (n < 1)
    throw invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16)
        break;
    }
    // recompute derivative at the converged node
    double p1 = 1.0, p2 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

inline QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1)
    throw invalid_argument("gauss_laguerre: need at least one node");
  if (!(alpha > -1.0))
    throw invalid_argument("gauss_laguerre: alpha must exceed -1");
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i)
    diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i)
    sub(i - 1) = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double mu0 = std::tgamma(alpha + 1.0);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v * v;
  }
  return rule;
}

enum class RadialRule {
  gaussian_weight, ///< Gauss rule against the Gaussian regulator weight
  adaptive,        ///< adaptive Gauss-Kronrod on [0, inf)
};

inline std::string to_string(RadialRule r) {
  return r == RadialRule::gaussian_weight ? "gauss-with-gaussian-weight"
                                          : "adaptive";
}

struct QuadratureSpec {
  int n_theta = 32;
  int n_phi = 32;
  RadialRule radial = RadialRule::gaussian_weight;
  int n_radial = 64;
  double abs_tol = 1e-10;
  double rel_tol = 1e-6;

  void validate() const {
    if (n_theta < 4 || n_phi < 4 || n_radial < 4)
      throw invalid_argument("QuadratureSpec: node counts must be >= 4");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw invalid_argument("QuadratureSpec: tolerances must be positive");
  }

  /// Node counts scaled up for the brute-force product grid.
  QuadratureSpec refined(int factor = 4) const {
    QuadratureSpec q = *this;
    q.n_theta *= factor;
    q.n_phi *= factor;
    q.n_radial *= factor;
    return q;
  }
};

} // namespace nwloc
