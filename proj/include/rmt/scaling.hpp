#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/fredholm.hpp"

namespace rmt {

// Bulk-scaled orthogonal-group generating function:
// E^{O^pm}((0,s); z) = det(I - z K^{mp}) on (0,s), K^pm = sinc pi(x-y) +- sinc pi(x+y).
// Note the sign swap between the label and the kernel.
inline cplx sine_genfn(int det_sign, double s, cplx z, double tol = 1e-12) {
    if (s < 0.0) throw std::invalid_argument("sine_genfn: s >= 0");
    if (s == 0.0 || z == cplx(0.0, 0.0)) return cplx(1.0, 0.0);
    ContinuousKernel k = sine_kernel(det_sign > 0 ? -1 : +1);
    int n0 = 16;
    while (n0 < 2.0 * s + 16.0) n0 *= 2;
    return nystrom_fredholm_det(k, 0.0, s, z, tol, n0, 8192).value;
}

// Bulk COE gap generating function (xi in [0,2) real, or complex for the
// characteristic-function route):
//   E^{COE_inf}((0,s); xi)
//     = [ (1-xi) E^{O^+}((0,s/2); xi(2-xi)) + E^{O^-}((0,s/2); xi(2-xi)) ] / (2-xi)
inline cplx coe_bulk_genfn(double s, cplx xi) {
    if (s < 0.0) throw std::invalid_argument("coe_bulk_genfn: s >= 0");
    if (s == 0.0) return cplx(1.0, 0.0);
    cplx zz = xi * (cplx(2.0, 0.0) - xi);
    cplx ep = sine_genfn(+1, 0.5 * s, zz);
    cplx em = sine_genfn(-1, 0.5 * s, zz);
    return ((cplx(1.0, 0.0) - xi) * ep + em) / (cplx(2.0, 0.0) - xi);
}

//   E^{CSE_inf}((0,s); xi) = ( E^{O^+}((0,s/2); xi) + E^{O^-}((0,s/2); xi) ) / 2
inline cplx cse_bulk_genfn(double s, cplx xi) {
    if (s < 0.0) throw std::invalid_argument("cse_bulk_genfn: s >= 0");
    if (s == 0.0) return cplx(1.0, 0.0);
    return 0.5 * (sine_genfn(+1, 0.5 * s, xi) + sine_genfn(-1, 0.5 * s, xi));
}

struct PowerSpectrumResult {
    double value = 0.0;
    double est_error = 0.0;  // spread of the last accelerated estimates
    double s_max = 0.0;      // where the integration stopped
    int panels = 0;
};

// Bulk COE power spectrum
//   S(omega) = Re int_0^inf E^{COE_inf}((0,s); 1 - e^{i omega}) ds / (2 sin^2(omega/2)).
// The integrand oscillates like e^{i omega s} with an amplitude decaying only
// like s^{-omega^2/pi^2}, so a plain magnitude cutoff never triggers. The
// integral is taken exactly over half-period panels and the alternating tail
// of partial sums is resummed by iterated averaging (no asymptotic model).
inline PowerSpectrumResult power_spectrum_coe(double omega, double tol = 2e-5,
                                              int max_panels = 28) {
    if (!(omega > 0.0 && omega <= pi))
        throw std::invalid_argument("power_spectrum_coe: 0 < omega <= pi");
    cplx xi = cplx(1.0, 0.0) - std::exp(cplx(0.0, omega));
    auto integrand = [&](double s) { return std::real(coe_bulk_genfn(s, xi)); };

    double h = pi / omega;  // half period of e^{i omega s}
    const QuadRule& gl = gauss_legendre(12);
    std::vector<double> partial;  // partial integrals over [0, k h]
    double acc = 0.0;
    PowerSpectrumResult res;
    double best = 0.0, prev_best = 0.0;
    for (int k = 0; k < max_panels; ++k) {
        double a = k * h, b = (k + 1) * h;
        QuadRule q = map_to_interval(gl, a, b);
        double panel = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) panel += q.w[i] * integrand(q.x[i]);
        acc += panel;
        partial.push_back(acc);
        res.panels = k + 1;
        res.s_max = b;
        if (partial.size() >= 6) {
            // iterated averaging of the oscillating partial sums
            std::vector<double> row(partial.end() - 6, partial.end());
            while (row.size() > 1) {
                for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
                row.pop_back();
            }
            prev_best = best;
            best = row[0];
            if (partial.size() >= 8 && std::abs(best - prev_best) < tol) break;
        }
    }
    res.est_error = std::abs(best - prev_best) / (2.0 * std::pow(std::sin(0.5 * omega), 2));
    res.value = best / (2.0 * std::pow(std::sin(0.5 * omega), 2));
    return res;
}

} // namespace rmt
