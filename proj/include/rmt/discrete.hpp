#pragma once

#include <cmath>
#include <complex>

#include "rmt/common.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/formfactor.hpp"
#include "rmt/fredholm.hpp"
#include "rmt/gap.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/rng.hpp"
#include "rmt/specfun.hpp"

namespace rmt {

// dLUE generating function: det[ I_N - xi K^d(j1,j2) ] over {0,...,N-1}
// with the discrete Laguerre kernel at (alpha, s).
inline cplx dlue_genfn(int n, double alpha, double s, cplx xi) {
    if (n < 1) throw std::invalid_argument("dlue_genfn: n >= 1");
    DiscreteLaguerreKernel k(alpha, s, n - 1);
    return discrete_det_finite([&](int a, int b) { return k(a, b); }, 0, n - 1, xi);
}

// <e^{s sum_j cos theta_j}> over CUE_N by ordered quadrature (n <= 5).
inline double cue_exp_cos_average(int n, double s, int nodes = 24) {
    if (n < 1 || n > 5) throw std::invalid_argument("cue_exp_cos_average: 1 <= n <= 5");
    if (s == 0.0) return 1.0;
    double prev = 0.0;
    bool have = false;
    for (int nq = nodes;; nq = (3 * nq) / 2) {
        const QuadRule& base = gauss_legendre(nq);
        double num = 0.0, den = 0.0;
        std::vector<double> pts;
        // ordered recursion over theta_1 > ... > theta_n
        std::function<void(double, int, double, double)> rec =
            [&](double upper, int depth, double prod, double stat) {
            double c = 0.5 * (upper + pi), m = 0.5 * (upper - pi);
            for (std::size_t i = 0; i < base.size(); ++i) {
                double u = m + c * base.x[i];
                double w = c * base.w[i];
                double p = prod * w;
                for (double v : pts) p *= std::norm(std::exp(cplx(0, u)) - std::exp(cplx(0, v)));
                double st = stat + std::cos(u);
                if (depth == n - 1) {
                    num += p * std::exp(s * st);
                    den += p;
                } else {
                    pts.push_back(u);
                    rec(u, depth + 1, p, st);
                    pts.pop_back();
                }
            }
        };
        rec(pi, 0, 1.0, 0.0);
        double v = num / den;
        if (have && std::abs(v - prev) < 1e-9 * std::abs(v)) return v;
        prev = v;
        have = true;
        if (nq >= 140) return prev;
    }
}

inline MCEstimate mc_cue_exp_cos_average(int n, double s, long n_samples, std::uint64_t seed) {
    rng_t g = make_rng(seed);
    double s1 = 0.0, s2 = 0.0;
    for (long i = 0; i < n_samples; ++i) {
        Spectrum sp = sample_circular(2, n, g);
        double acc = 0.0;
        for (double t : sp.values()) acc += std::cos(t);
        double v = std::exp(s * acc);
        s1 += v;
        s2 += v * v;
    }
    double m = double(n_samples);
    MCEstimate est;
    est.value = s1 / m;
    est.se = std::sqrt(std::max(s2 / m - est.value * est.value, 0.0) / m);
    est.n_samples = n_samples;
    return est;
}

// e^{s^2/4} det(I - xi K^{dB}) over the discrete index set {n+1, n+2, ...}.
inline cplx bo_rhs_discrete(int n, double s, cplx xi) {
    if (s <= 0.0) return cplx(1.0, 0.0);
    DiscreteBesselKernel k(s);
    cplx det = discrete_det_semi_infinite([&](int a, int b) { return k(a, b); }, n + 1, xi);
    return std::exp(0.25 * s * s) * det;
}

// e^{s^2/4} det(I - xi K^B) on (0, s^2) with the order-alpha Bessel kernel.
inline cplx bo_rhs_continuous(int n, double s, cplx xi) {
    if (s <= 0.0) return cplx(1.0, 0.0);
    ContinuousKernel k = bessel_kernel(double(n));
    cplx det = nystrom_fredholm_det(k, 0.0, s * s, xi, 1e-13, 16, 1024).value;
    return std::exp(0.25 * s * s) * det;
}

} // namespace rmt
