#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/rng.hpp"

namespace rmt {

// S_N^{GUE}(k) = int_0^k t rho_1^{LUE_{N,0}}(t^2/2) dt
inline double sff_gue(int n, double k) {
    if (n < 1 || k < 0.0) throw std::invalid_argument("sff_gue: n >= 1, k >= 0");
    if (k == 0.0) return 0.0;
    CDKernel lag(WeightSpec::laguerre_b2(0.0), n);
    return integrate_adaptive([&](double t) { return t * lag.diag(0.5 * t * t); }, 0.0, k,
                              1e-10, 64);
}

// S_N^{LUE_alpha}(k) = int_{1/(1+k^2)}^1 rho_1^{JUE_{N,(alpha,0)}}(t) dt on (0,1)
inline double sff_lue(int n, double alpha, double k) {
    if (n < 1 || alpha <= -1.0 || k < 0.0)
        throw std::invalid_argument("sff_lue: n >= 1, alpha > -1, k >= 0");
    if (k == 0.0) return 0.0;
    CDKernel jac(WeightSpec::jacobi_unit(alpha, 0.0), n);
    double lo = 1.0 / (1.0 + k * k);
    return integrate_adaptive([&](double t) { return jac.diag(t); }, lo, 1.0, 1e-10, 64);
}

// Direct evaluation of the variance of sum_j e^{i k x_j} for a beta=2
// ensemble: S_N(k) = N - sum_{j,l<N} | int e^{ikx} psi_j psi_l dx |^2.
inline double sff_bruteforce(const WeightSpec& w, int n, double k) {
    if (n < 1 || k < 0.0) throw std::invalid_argument("sff_bruteforce: n >= 1, k >= 0");
    if (k == 0.0) return 0.0;
    OPBasis basis(w, n);
    double prev = 0.0;
    bool have = false;
    for (int nq = 256; nq <= 4096; nq *= 2) {
        QuadRule q;
        switch (w.family()) {
            case weight_family::gaussian_beta2:
                q = map_to_interval(gauss_legendre(nq), -(2.5 * std::sqrt(double(n)) + 9.0),
                                    2.5 * std::sqrt(double(n)) + 9.0);
                break;
            case weight_family::laguerre_beta2:
                q = map_to_half_line(gauss_legendre(nq), 0.0);
                break;
            default: throw std::invalid_argument("sff_bruteforce: gaussian/laguerre weights only");
        }
        std::vector<cplx> m(n * n, cplx(0.0, 0.0));
        std::vector<double> ph(n);
        for (std::size_t i = 0; i < q.size(); ++i) {
            double x = q.x[i];
            double lw = w.log_evaluate(x);
            if (std::isinf(lw)) continue;
            basis.orthonormal(x, n, ph.data());
            cplx e = q.w[i] * std::exp(lw) * std::exp(cplx(0.0, k * x));
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) m[a * n + b] += e * ph[a] * ph[b];
        }
        double tot = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                cplx v = (a <= b) ? m[a * n + b] : m[b * n + a];
                tot += std::norm(v);
            }
        double s = n - tot;
        if (have && std::abs(s - prev) < 1e-10) return s;
        prev = s;
        have = true;
    }
    return prev;
}

// Dissipative spectral form factor of the unit-disk-scaled Ginibre ensemble,
// expressed through the GUE form factor:
//   S_N^{GinUE*}(|T|) = N - e^{-|T|^2/N} ( N - S_N^{GUE}(|T| sqrt(2/N)) ),
// with S^{GUE} in the weight-e^{-x^2} convention of sff_gue. The Gaussian
// damping and the frequency rescaling absorb the Ginibre/GUE* conventions;
// the pairing was fixed by matching the two-point cluster integrals exactly.
inline double dsff_ginue(int n, double t_abs) {
    if (n < 1 || t_abs < 0.0) throw std::invalid_argument("dsff_ginue: n >= 1, |T| >= 0");
    if (t_abs == 0.0) return 0.0;
    double damp = std::exp(-t_abs * t_abs / double(n));
    double sg = sff_gue(n, t_abs * std::sqrt(2.0 / double(n)));
    return n - damp * (n - sg);
}

struct MCEstimate {
    double value = 0.0;
    double se = 0.0;
    long n_samples = 0;
};

// Monte Carlo estimate of the connected dissipative form factor
//   < |sum_j u_j|^2 > - | < sum_j u_j > |^2,  u_j = e^{i conj(T) z_j + i T conj(z_j)}
// over GinUE* samples; the standard error combines the three sample means by
// the delta method.
inline MCEstimate mc_dsff_ginue(int n, cplx T, long n_samples, std::uint64_t seed) {
    rng_t g = make_rng(seed);
    double sa = 0.0, sa2 = 0.0;
    double sbr = 0.0, sbr2 = 0.0, sbi = 0.0, sbi2 = 0.0;
    double sabr = 0.0, sabi = 0.0, sbrbi = 0.0;
    for (long i = 0; i < n_samples; ++i) {
        std::vector<cplx> z = sample_ginibre_scaled(n, g);
        cplx s(0.0, 0.0);
        for (cplx zz : z) s += std::exp(cplx(0.0, 1.0) * (std::conj(T) * zz + T * std::conj(zz)));
        double a = std::norm(s), br = s.real(), bi = s.imag();
        sa += a;
        sa2 += a * a;
        sbr += br;
        sbr2 += br * br;
        sbi += bi;
        sbi2 += bi * bi;
        sabr += a * br;
        sabi += a * bi;
        sbrbi += br * bi;
    }
    double m = double(n_samples);
    double A = sa / m, Br = sbr / m, Bi = sbi / m;
    double vA = sa2 / m - A * A, vBr = sbr2 / m - Br * Br, vBi = sbi2 / m - Bi * Bi;
    double cABr = sabr / m - A * Br, cABi = sabi / m - A * Bi, cBrBi = sbrbi / m - Br * Bi;
    MCEstimate est;
    est.value = A - Br * Br - Bi * Bi;
    // gradient (1, -2Br, -2Bi)
    double var = vA + 4 * Br * Br * vBr + 4 * Bi * Bi * vBi - 4 * Br * cABr - 4 * Bi * cABi +
                 8 * Br * Bi * cBrBi;
    est.se = std::sqrt(std::max(var, 0.0) / m);
    est.n_samples = n_samples;
    return est;
}

} // namespace rmt
