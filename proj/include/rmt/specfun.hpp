#pragma once

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "rmt/common.hpp"

namespace rmt {

// Bessel J_nu for real order nu >= 0; backed by Boost.Math (series plus
// stable recurrences internally). Arguments in this project stay modest
// (|x| <= ~10), orders up to ~100.
inline double bessel_j(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return boost::math::cyl_bessel_j(nu, x);
}

inline double bessel_j_prime(double nu, double x) {
    if (nu == 0.0) return -bessel_j(1.0, x);
    // J'_nu = J_{nu-1} - (nu/x) J_nu
    return bessel_j(nu - 1.0, x) - (nu / x) * bessel_j(nu, x);
}

inline double bessel_i0(double x) { return boost::math::cyl_bessel_i(0.0, x); }

// Regularized upper incomplete gamma Q(a, x); chi-square tail prob is
// Q(dof/2, x/2).
inline double gamma_q(double a, double x) { return boost::math::gamma_q(a, x); }

inline double chi2_sf(double stat, double dof) { return gamma_q(0.5 * dof, 0.5 * stat); }

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Kolmogorov distribution tail Q_KS(t) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 t^2}.
inline double kolmogorov_q(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 8.0) return 0.0;
    double s = 0.0;
    for (int j = 1; j <= 100; ++j) {
        double term = 2.0 * ((j % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * j * j * t * t);
        s += term;
        if (std::abs(term) < 1e-16) break;
    }
    return std::min(1.0, std::max(0.0, s));
}

} // namespace rmt
