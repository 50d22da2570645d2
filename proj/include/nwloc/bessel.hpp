#pragma once
// Spherical Bessel functions j_l(x) for l = 0..L by recurrence.
//
// Upward recurrence from j_0, j_1 is stable while l < x; otherwise the
// values are obtained by Miller's downward recurrence normalized to j_0.
// sph_bessel_scaled returns j_l(x) / x^l, finite at x = 0.
#include <cmath>
#include <vector>

#include "nwloc/errors.hpp"

namespace nwloc {

namespace detail {

// j_l(x) / x^l from the power series, for small x.
inline double sph_bessel_scaled_series(int l, double x) {
  double dfact = 1.0; // (2l+1)!!
  for (int k = 3; k <= 2 * l + 1; k += 2)
    dfact *= k;
  const double y = -0.5 * x * x;
  double term = 1.0 / dfact, sum = term;
  for (int s = 1; s < 60; ++s) {
    term *= y / (s * (2.0 * l + 2.0 * s + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum))
      break;
  }
  return sum;
}

} // namespace detail

/// j_0(x) ... j_L(x).
inline std::vector<double> sph_bessel_all(int L, double x) {
  if (L < 0)
    throw invalid_argument("sph_bessel_all: negative order");
  std::vector<double> j(L + 1, 0.0);
  const double ax = std::abs(x);
  if (ax < 1e-3) {
    double xl = 1.0;
    for (int l = 0; l <= L; ++l) {
      j[l] = xl * detail::sph_bessel_scaled_series(l, x);
      xl *= x;
    }
    return j;
  }
  const double j0 = std::sin(x) / x;
  j[0] = j0;
  if (L == 0)
    return j;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (ax > L) {
    j[1] = j1;
    for (int l = 1; l < L; ++l)
      j[l + 1] = (2.0 * l + 1.0) / x * j[l] - j[l - 1];
    return j;
  }
  // Miller: start well above max(L, x) with arbitrary seed
  const int start = L + 20 + static_cast<int>(std::sqrt(40.0 * (L + ax)));
  double next = 0.0, cur = 1e-300;
  for (int l = start; l > 0; --l) {
    const double prev = (2.0 * l + 1.0) / x * cur - next;
    next = cur;
    cur = prev;
    if (l - 1 <= L)
      j[l - 1] = cur;
    if (std::abs(cur) > 1e250) {
      next *= 1e-250;
      cur *= 1e-250;
      for (int k = l - 1; k <= L; ++k)
        j[k] *= 1e-250;
    }
  }
  // normalize with whichever of j_0, j_1 is better conditioned
  const double scale =
      std::abs(j0) > std::abs(j1) ? j0 / j[0] : j1 / j[1];
  for (double &v : j)
    v *= scale;
  return j;
}

inline double sph_bessel(int l, double x) { return sph_bessel_all(l, x)[l]; }

/// j_l(x) / x^l.
inline double sph_bessel_scaled(int l, double x) {
  if (std::abs(x) < 0.5)
    return detail::sph_bessel_scaled_series(l, x);
  return sph_bessel(l, x) / std::pow(x, l);
}

} // namespace nwloc
