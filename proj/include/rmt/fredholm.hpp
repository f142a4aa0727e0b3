#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "rmt/common.hpp"
#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/specfun.hpp"

namespace rmt {

// Symmetric continuous kernel with an explicit diagonal (divided-difference
// kernels need the limit form there).
struct ContinuousKernel {
    std::function<double(double, double)> off;
    std::function<double(double)> diag;
    double operator()(double x, double y) const {
        if (std::abs(x - y) < 1e-9 * (1.0 + std::abs(x) + std::abs(y))) return diag(0.5 * (x + y));
        return off(x, y);
    }
};

// sinc-kernel pair K^pm(x,y) = sinc pi(x-y) +- sinc pi(x+y)
inline ContinuousKernel sine_kernel(int sign) {
    double s = sign >= 0 ? 1.0 : -1.0;
    return ContinuousKernel{
        [s](double x, double y) { return sinc_pi(x - y) + s * sinc_pi(x + y); },
        [s](double x) { return 1.0 + s * sinc_pi(2.0 * x); }};
}

inline ContinuousKernel full_sine_kernel() {
    return ContinuousKernel{[](double x, double y) { return sinc_pi(x - y); },
                            [](double) { return 1.0; }};
}

// Bessel kernel of order alpha in the squared variable:
// K(x,y) = [J_a(sx) sy J'_a(sy) - sx J'_a(sx) J_a(sy)] / (2(x-y)), s* = sqrt(*)
inline ContinuousKernel bessel_kernel(double alpha) {
    auto off = [alpha](double x, double y) {
        double u = std::sqrt(x), v = std::sqrt(y);
        double ju = bessel_j(alpha, u), jv = bessel_j(alpha, v);
        double dju = bessel_j_prime(alpha, u), djv = bessel_j_prime(alpha, v);
        return (ju * v * djv - u * dju * jv) / (2.0 * (x - y));
    };
    auto diag = [alpha](double x) {
        double u = std::sqrt(x);
        double ju = bessel_j(alpha, u), dju = bessel_j_prime(alpha, u);
        return 0.25 * ((1.0 - alpha * alpha / x) * ju * ju + dju * dju);
    };
    return ContinuousKernel{off, diag};
}

struct FredholmResult {
    cplx value{1.0, 0.0};
    double achieved_tol = 0.0;
    int nodes = 0;
};

namespace detail {

inline Eigen::MatrixXd symmetrized_matrix(const ContinuousKernel& k, const QuadRule& q) {
    int n = int(q.size());
    Eigen::MatrixXd m(n, n);
    std::vector<double> sw(n);
    for (int i = 0; i < n; ++i) sw[i] = std::sqrt(q.w[i]);
    for (int i = 0; i < n; ++i) {
        m(i, i) = q.w[i] * k.diag(q.x[i]);
        for (int j = i + 1; j < n; ++j) {
            double v = sw[i] * sw[j] * k(q.x[i], q.x[j]);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

inline cplx det_from_eigs(const Eigen::VectorXd& lam, cplx z) {
    cplx d(1.0, 0.0);
    for (int i = 0; i < lam.size(); ++i) d *= (cplx(1.0, 0.0) - z * lam[i]);
    return d;
}

} // namespace detail

// det(I - z K_J) by Gauss-Legendre Nystrom on J=(a,b), doubling the node
// count until two successive values differ by < tol.
inline FredholmResult nystrom_fredholm_det(const ContinuousKernel& k, double a, double b, cplx z,
                                           double tol = 1e-12, int n0 = 16, int node_cap = 512) {
    if (!(b > a)) return FredholmResult{cplx(1.0, 0.0), 0.0, 0};
    cplx prev(0.0, 0.0);
    bool have = false;
    double last_diff = 0.0;
    for (int n = n0; n <= node_cap; n *= 2) {
        QuadRule q = map_to_interval(gauss_legendre(n), a, b);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(detail::symmetrized_matrix(k, q),
                                                          Eigen::EigenvaluesOnly);
        cplx v = detail::det_from_eigs(es.eigenvalues(), z);
        if (have) {
            last_diff = std::abs(v - prev);
            if (last_diff < tol) return FredholmResult{v, last_diff, n};
        }
        prev = v;
        have = true;
    }
    std::ostringstream os;
    os << "nystrom_fredholm_det: no convergence at node cap (last=" << prev
       << ", diff=" << last_diff << ")";
    throw numeric_error(os.str());
}

// Same but for a kernel with eigenvalues cached across z values.
class NystromOperator {
  public:
    NystromOperator(const ContinuousKernel& k, double a, double b, double tol = 1e-12,
                    int n0 = 16, int node_cap = 2048) {
        if (!(b > a)) {
            converged_ = true;
            return;
        }
        double prev_probe = 0.0;
        bool have = false;
        for (int n = n0; n <= node_cap; n *= 2) {
            QuadRule q = map_to_interval(gauss_legendre(n), a, b);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(detail::symmetrized_matrix(k, q),
                                                              Eigen::EigenvaluesOnly);
            lam_.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
            // probe with z = 1 (worst-case alternating product)
            double probe = std::real(det(1.0));
            if (have && std::abs(probe - prev_probe) < tol) {
                converged_ = true;
                nodes_ = n;
                return;
            }
            prev_probe = probe;
            have = true;
        }
        nodes_ = node_cap;
    }

    cplx det(cplx z) const {
        cplx d(1.0, 0.0);
        for (double l : lam_) d *= (cplx(1.0, 0.0) - z * l);
        return d;
    }
    bool converged() const { return converged_; }
    int nodes() const { return nodes_; }
    const std::vector<double>& eigenvalues() const { return lam_; }

  private:
    std::vector<double> lam_;
    bool converged_ = false;
    int nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Discrete kernels

// Discrete Bessel kernel at parameter s > 0. Off the diagonal this is
// s (J_{n1} J_{n2+1} - J_{n1+1} J_{n2}) / (2 (n1-n2)); the diagonal is the
// continuous limit of that quotient, computed here via the equivalent
// telescoped series sum_{l>=1} J_{n+l}(s)^2 (the same series evaluates all
// entries and agrees with the quotient to machine precision).
class DiscreteBesselKernel {
  public:
    explicit DiscreteBesselKernel(double s) : s_(s) {
        if (s <= 0.0) throw std::invalid_argument("discrete bessel kernel: s > 0");
    }

    double operator()(int n1, int n2) const {
        ensure(std::max(n1, n2) + tail_len(n1, n2) + 2);
        double acc = 0.0;
        for (int l = 1; l <= tail_len(n1, n2); ++l) {
            double t = j_[n1 + l] * j_[n2 + l];
            acc += t;
        }
        return acc;
    }

    double quotient_form(int n1, int n2) const {
        if (n1 == n2) return (*this)(n1, n2);
        ensure(std::max(n1, n2) + 2);
        return s_ * (j_[n1] * j_[n2 + 1] - j_[n1 + 1] * j_[n2]) / (2.0 * (n1 - n2));
    }

    double s() const { return s_; }

  private:
    int tail_len(int n1, int n2) const {
        // J_{n+l}(s) decays super-exponentially once n+l > s
        (void)n1;
        (void)n2;
        return int(4.0 * s_) + 60;
    }
    void ensure(int mmax) const {
        if (int(j_.size()) >= mmax + 1) return;
        j_.resize(mmax + 1);
        for (int m = 0; m <= mmax; ++m) j_[m] = bessel_j(double(m), s_);
    }

    double s_;
    mutable std::vector<double> j_;
};

// Discrete Laguerre kernel: K(n1,n2) = int_s^inf psi_{n1}(x) psi_{n2}(x) dx
// with the orthonormal Laguerre functions of parameter alpha. Entries are
// evaluated with a mapped Gauss-Legendre rule, doubling until stable.
class DiscreteLaguerreKernel {
  public:
    DiscreteLaguerreKernel(double alpha, double s, int max_index)
        : alpha_(alpha), s_(s), basis_(WeightSpec::laguerre_b2(alpha), max_index + 1) {
        if (s <= 0.0) throw std::invalid_argument("discrete laguerre kernel: s > 0");
        if (alpha <= -1.0) throw std::invalid_argument("discrete laguerre kernel: alpha > -1");
        int K = max_index + 1;
        Eigen::MatrixXd prev;
        for (int n = 64; n <= 2048; n *= 2) {
            QuadRule q = map_to_half_line(gauss_legendre(n), s_);
            Eigen::MatrixXd G = Eigen::MatrixXd::Zero(K, K);
            std::vector<double> ph(K);
            for (std::size_t i = 0; i < q.size(); ++i) {
                basis_.phi(q.x[i], K, ph.data());
                for (int a = 0; a < K; ++a)
                    for (int b = a; b < K; ++b) G(a, b) += q.w[i] * ph[a] * ph[b];
            }
            G = G.selfadjointView<Eigen::Upper>();
            if (prev.size() > 0 && (G - prev).cwiseAbs().maxCoeff() < 1e-13) {
                k_ = G;
                return;
            }
            prev = G;
        }
        k_ = prev;
    }

    double operator()(int n1, int n2) const { return k_(n1, n2); }
    int max_index() const { return int(k_.rows()) - 1; }

  private:
    double alpha_, s_;
    OPBasis basis_;
    Eigen::MatrixXd k_;
};

// det(I - xi K) over the finite index set {lo, ..., hi}
template <class EntryFn>
cplx discrete_det_finite(EntryFn&& entry, int lo, int hi, cplx xi) {
    int m = hi - lo + 1;
    if (m <= 0) return cplx(1.0, 0.0);
    Eigen::MatrixXd k(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double v = entry(lo + i, lo + j);
            k(i, j) = v;
            k(j, i) = v;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
    return detail::det_from_eigs(es.eigenvalues(), xi);
}

// det(I - xi K) over the semi-infinite index set {start, start+1, ...},
// truncated at a cap that doubles until the value is stable to tol.
template <class EntryFn>
cplx discrete_det_semi_infinite(EntryFn&& entry, int start, cplx xi, double tol = 1e-12,
                                int m0 = 16, int m_cap = 1024) {
    cplx prev(0.0, 0.0);
    bool have = false;
    for (int m = m0; m <= m_cap; m *= 2) {
        cplx v = discrete_det_finite(entry, start, start + m - 1, xi);
        if (have && std::abs(v - prev) < tol) return v;
        prev = v;
        have = true;
    }
    throw numeric_error("discrete_det_semi_infinite: truncation did not converge");
}

} // namespace rmt
