#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/weights.hpp"

namespace rmt {

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1} for the
// classical weights, with norms kept in log space. Degrees are modest
// (<= a few hundred), so closed-form classical coefficients are exact enough.
class OPBasis {
  public:
    OPBasis(const WeightSpec& w, int max_degree) : weight_(w), kmax_(max_degree) {
        if (max_degree < 0) throw std::invalid_argument("max_degree >= 0");
        a_.resize(kmax_ + 2);
        b_.resize(kmax_ + 2, 0.0);
        switch (w.family()) {
            case weight_family::gaussian_beta2: {
                for (int k = 0; k <= kmax_ + 1; ++k) {
                    a_[k] = 0.0;
                    if (k >= 1) b_[k] = 0.5 * k;
                }
                logm0_ = 0.5 * std::log(pi);
                break;
            }
            case weight_family::laguerre_beta2: {
                double al = w.a();
                for (int k = 0; k <= kmax_ + 1; ++k) {
                    a_[k] = 2.0 * k + al + 1.0;
                    if (k >= 1) b_[k] = k * (k + al);
                }
                logm0_ = std::lgamma(al + 1.0);
                break;
            }
            case weight_family::jacobi_beta2: {
                // weight (1+x)^a (1-x)^b ; standard jacobi (1-x)^A (1+x)^B
                init_jacobi(w.b(), w.a());
                break;
            }
            case weight_family::jacobi_unit: {
                // x^a (1-x)^b on (0,1): affine image of (1+u)^a (1-u)^b / 2^{a+b}
                init_jacobi(w.b(), w.a());
                for (int k = 0; k <= kmax_ + 1; ++k) {
                    a_[k] = 0.5 * (1.0 + a_[k]);
                    if (k >= 1) b_[k] *= 0.25;
                }
                logm0_ -= (w.a() + w.b() + 1.0) * std::log(2.0);
                break;
            }
            default:
                throw std::invalid_argument("OPBasis: unsupported weight family");
        }
        log_norms_.resize(kmax_ + 1);
        double acc = logm0_;
        for (int k = 0; k <= kmax_; ++k) {
            if (k >= 1) acc += std::log(b_[k]);
            log_norms_[k] = acc;
        }
    }

    const WeightSpec& weight() const { return weight_; }
    int max_degree() const { return kmax_; }
    double rec_a(int k) const { return a_[k]; }
    double rec_b(int k) const { return b_[k]; }
    double log_norm(int k) const { return log_norms_[k]; }
    double log_m0() const { return logm0_; }

    // Orthonormal polynomials ptilde_0..ptilde_{K-1} at x.
    void orthonormal(double x, int K, double* out) const {
        double p0 = std::exp(-0.5 * logm0_);
        out[0] = p0;
        if (K == 1) return;
        out[1] = (x - a_[0]) * out[0] / std::sqrt(b_[1]);
        for (int k = 1; k + 1 < K; ++k)
            out[k + 1] = ((x - a_[k]) * out[k] - std::sqrt(b_[k]) * out[k - 1]) /
                         std::sqrt(b_[k + 1]);
    }

    // Orthonormal polynomials and their derivatives.
    void orthonormal_deriv(double x, int K, double* p, double* dp) const {
        p[0] = std::exp(-0.5 * logm0_);
        dp[0] = 0.0;
        if (K == 1) return;
        double s1 = std::sqrt(b_[1]);
        p[1] = (x - a_[0]) * p[0] / s1;
        dp[1] = p[0] / s1;
        for (int k = 1; k + 1 < K; ++k) {
            double sk1 = std::sqrt(b_[k + 1]), sk = std::sqrt(b_[k]);
            p[k + 1] = ((x - a_[k]) * p[k] - sk * p[k - 1]) / sk1;
            dp[k + 1] = (p[k] + (x - a_[k]) * dp[k] - sk * dp[k - 1]) / sk1;
        }
    }

    // Weighted orthonormal functions phi_j = ptilde_j sqrt(w).
    void phi(double x, int K, double* out) const {
        orthonormal(x, K, out);
        double sw = std::exp(0.5 * weight_.log_evaluate(x));
        for (int j = 0; j < K; ++j) out[j] *= sw;
    }

  private:
    void init_jacobi(double A, double B) {
        // weight (1-x)^A (1+x)^B on (-1,1), monic coefficients
        double ab = A + B;
        for (int k = 0; k <= kmax_ + 1; ++k) {
            if (k == 0)
                a_[0] = (B - A) / (ab + 2.0);
            else
                a_[k] = (B * B - A * A) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
            if (k == 1)
                b_[1] = 4.0 * (1.0 + A) * (1.0 + B) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
            else if (k >= 2) {
                double d = 2.0 * k + ab;
                b_[k] = 4.0 * k * (k + A) * (k + B) * (k + ab) / (d * d * (d * d - 1.0));
            }
        }
        logm0_ = (ab + 1.0) * std::log(2.0) + std::lgamma(A + 1.0) + std::lgamma(B + 1.0) -
                 std::lgamma(ab + 2.0);
    }

    WeightSpec weight_;
    int kmax_;
    std::vector<double> a_, b_, log_norms_;
    double logm0_ = 0.0;
};

// Christoffel-Darboux kernel K_N(x,y) for a beta=2 weight, as a callable.
// Diagonal and near-diagonal values use the derivative form.
class CDKernel {
  public:
    CDKernel(const WeightSpec& w, int n) : basis_(w, n), n_(n) {
        if (n < 1) throw std::invalid_argument("cd_kernel: n >= 1");
        sb_ = std::sqrt(basis_.rec_b(n));
    }

    double operator()(double x, double y) const {
        const WeightSpec& w = basis_.weight();
        if (!w.in_support(x) || !w.in_support(y)) return 0.0;
        double scale = 1.0 + std::abs(x) + std::abs(y);
        if (std::abs(x - y) < 1e-7 * scale) return diag(0.5 * (x + y));
        std::vector<double> px(n_ + 1), py(n_ + 1);
        basis_.orthonormal(x, n_ + 1, px.data());
        basis_.orthonormal(y, n_ + 1, py.data());
        double sw = std::exp(0.5 * (w.log_evaluate(x) + w.log_evaluate(y)));
        return sb_ * sw * (px[n_] * py[n_ - 1] - px[n_ - 1] * py[n_]) / (x - y);
    }

    double diag(double x) const {
        const WeightSpec& w = basis_.weight();
        if (!w.in_support(x)) return 0.0;
        std::vector<double> p(n_ + 1), dp(n_ + 1);
        basis_.orthonormal_deriv(x, n_ + 1, p.data(), dp.data());
        double wx = std::exp(w.log_evaluate(x));
        return sb_ * wx * (dp[n_] * p[n_ - 1] - dp[n_ - 1] * p[n_]);
    }

    // one-point density of the n-point beta=2 ensemble
    double density(double x) const { return diag(x); }

    const OPBasis& basis() const { return basis_; }
    int n() const { return n_; }

  private:
    OPBasis basis_;
    int n_;
    double sb_;
};

} // namespace rmt
