#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rmt/common.hpp"
#include "rmt/rng.hpp"
#include "rmt/spectrum.hpp"
#include "rmt/weights.hpp"

namespace rmt {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Z_{N,beta} = (2 pi)^N Gamma(1 + N beta/2) / Gamma(1 + beta/2)^N
inline double circular_log_normalization(int n, double beta) {
    if (n < 1) throw std::invalid_argument("circular_normalization: n >= 1");
    if (beta <= 0.0) throw std::invalid_argument("circular_normalization: beta > 0");
    return n * std::log(two_pi) + std::lgamma(1.0 + 0.5 * n * beta) -
           n * std::lgamma(1.0 + 0.5 * beta);
}

inline double circular_normalization(int n, double beta) {
    return std::exp(circular_log_normalization(n, beta));
}

namespace detail {

inline MatrixXd real_gauss_matrix(int rows, int cols, rng_t& g) {
    gauss_draw gd;
    MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = gd(g);
    return m;
}

inline MatrixXcd complex_gauss_matrix(int rows, int cols, rng_t& g) {
    gauss_draw gd;
    MatrixXcd m(rows, cols);
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            double re = gd(g), im = gd(g);
            m(i, j) = cplx(s * re, s * im);
        }
    return m;
}

inline std::vector<double> sorted_eigs(const Eigen::SelfAdjointEigenSolver<MatrixXd>& es) {
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

// Angles of the eigenvalues of a unitary matrix, each exactly once.
inline std::vector<double> unitary_angles(const MatrixXcd& u) {
    Eigen::ComplexEigenSolver<MatrixXcd> es(u, false);
    if (es.info() != Eigen::Success) throw numeric_error("eigen decomposition failed");
    std::vector<double> ang(u.rows());
    for (int i = 0; i < u.rows(); ++i) ang[i] = std::arg(es.eigenvalues()[i]);
    return ang;
}

} // namespace detail

// Haar-distributed U(n): QR of a complex Ginibre matrix with the phases of
// the R diagonal pushed into Q.
inline MatrixXcd haar_unitary(int n, rng_t& g) {
    MatrixXcd a = detail::complex_gauss_matrix(n, n, g);
    Eigen::HouseholderQR<MatrixXcd> qr(a);
    MatrixXcd q = qr.householderQ();
    MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        cplx d = r(j, j);
        cplx ph = std::abs(d) > 0 ? d / std::abs(d) : cplx(1, 0);
        q.col(j) *= ph;
    }
    return q;
}

// Haar O^{sign}(n): orthogonalized real Gaussian with positive R diagonal,
// then a fixed column swap to land in the requested determinant component.
inline MatrixXd haar_orthogonal(int n, int det_sign, rng_t& g) {
    if (n < 1) throw std::invalid_argument("haar_orthogonal: n >= 1");
    MatrixXd a = detail::real_gauss_matrix(n, n, g);
    Eigen::HouseholderQR<MatrixXd> qr(a);
    MatrixXd q = qr.householderQ();
    MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    double d = q.determinant();
    if ((d > 0 ? 1 : -1) != det_sign) {
        if (n == 1)
            q(0, 0) *= -1.0;
        else
            q.col(0).swap(q.col(1));
    }
    return q;
}

// Eigen-angles of circular ensembles. beta=2: Haar U(N); beta=1: U^T U;
// beta=4: the self-dual construction on U(2N), each doubly degenerate angle
// returned once.
inline Spectrum sample_circular(int beta, int n, rng_t& g) {
    if (n < 1) throw std::invalid_argument("sample_circular: n >= 1");
    if (beta == 2) {
        return Spectrum(detail::unitary_angles(haar_unitary(n, g)), true);
    }
    if (beta == 1) {
        MatrixXcd u = haar_unitary(n, g);
        MatrixXcd s = u.transpose() * u;
        return Spectrum(detail::unitary_angles(s), true);
    }
    if (beta == 4) {
        int m = 2 * n;
        MatrixXcd u = haar_unitary(m, g);
        // dual: U^R = J U^T J^T with J = diag blocks [[0,1],[-1,0]]
        MatrixXcd jm = MatrixXcd::Zero(m, m);
        for (int k = 0; k < n; ++k) {
            jm(2 * k, 2 * k + 1) = 1.0;
            jm(2 * k + 1, 2 * k) = -1.0;
        }
        MatrixXcd s = jm * u.transpose() * jm.transpose() * u;
        Eigen::ComplexEigenSolver<MatrixXcd> es(s, false);
        if (es.info() != Eigen::Success) throw numeric_error("eigen decomposition failed");
        std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + m);
        // Kramers pairs: cluster the 2N eigenvalues into N coincident pairs.
        auto paired = [&](std::vector<double>& ang) {
            std::sort(ang.begin(), ang.end());
            for (int k = 0; k < n; ++k)
                if (std::abs(ang[2 * k] - ang[2 * k + 1]) > 1e-6) return false;
            return true;
        };
        std::vector<double> ang(m);
        for (int i = 0; i < m; ++i) ang[i] = std::arg(ev[i]);
        if (!paired(ang)) {
            // a degenerate pair straddles the branch cut at pi; re-cut at 0
            for (auto& t : ang)
                if (t < 0) t += two_pi;
            if (!paired(ang)) throw numeric_error("sample_circular: beta=4 pairing failed");
            for (auto& t : ang) t = wrap_angle(t);
            std::sort(ang.begin(), ang.end());
        }
        std::vector<double> once(n);
        for (int k = 0; k < n; ++k) once[k] = 0.5 * (ang[2 * k] + ang[2 * k + 1]);
        return Spectrum(std::move(once), true);
    }
    throw std::invalid_argument("sample_circular: beta must be 1, 2 or 4");
}

// GUE with weight e^{-x^2} (matrix density prop. to e^{-Tr X^2}).
inline Spectrum sample_gue(int n, rng_t& g) {
    gauss_draw gd;
    MatrixXcd h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = gd(g) / std::sqrt(2.0);
        for (int j = i + 1; j < n; ++j) {
            double re = 0.5 * gd(g), im = 0.5 * gd(g);
            h(i, j) = cplx(re, im);
            h(j, i) = cplx(re, -im);
        }
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum::from_sorted(std::move(v), false);
}

// GOE with weight e^{-x^2/2} (matrix density prop. to e^{-Tr X^2/2}).
inline Spectrum sample_goe(int n, rng_t& g) {
    gauss_draw gd;
    MatrixXd h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = gd(g);
        for (int j = i + 1; j < n; ++j) {
            double v = gd(g) / std::sqrt(2.0);
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(h, Eigen::EigenvaluesOnly);
    return Spectrum(std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + n), false);
}

// GSE with weight e^{-2x^2}: quaternion self-dual in the 2x2 complex block
// representation, doubly degenerate eigenvalues returned once.
inline Spectrum sample_gse(int n, rng_t& g) {
    gauss_draw gd;
    int m = 2 * n;
    MatrixXcd h = MatrixXcd::Zero(m, m);
    const double sd = 0.5;                  // diagonal sigma
    const double so = 0.5 / std::sqrt(2.0); // per-component off-diagonal sigma
    for (int i = 0; i < n; ++i) {
        double r = sd * gd(g);
        h(2 * i, 2 * i) = r;
        h(2 * i + 1, 2 * i + 1) = r;
        for (int j = i + 1; j < n; ++j) {
            double q0 = so * gd(g), q1 = so * gd(g), q2 = so * gd(g), q3 = so * gd(g);
            h(2 * i, 2 * j) = cplx(q0, q1);
            h(2 * i, 2 * j + 1) = cplx(q2, q3);
            h(2 * i + 1, 2 * j) = cplx(-q2, q3);
            h(2 * i + 1, 2 * j + 1) = cplx(q0, -q1);
            h(2 * j, 2 * i) = std::conj(h(2 * i, 2 * j));
            h(2 * j + 1, 2 * i) = std::conj(h(2 * i, 2 * j + 1));
            h(2 * j, 2 * i + 1) = std::conj(h(2 * i + 1, 2 * j));
            h(2 * j + 1, 2 * i + 1) = std::conj(h(2 * i + 1, 2 * j + 1));
        }
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = 0.5 * (es.eigenvalues()[2 * k] + es.eigenvalues()[2 * k + 1]);
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum::from_sorted(std::move(v), false);
}

// LUE_{N,alpha}, alpha = n_rows - N integer >= 0: complex Wishart X^dag X,
// weight x^alpha e^{-x}.
inline Spectrum sample_lue(int n, int alpha, rng_t& g) {
    if (alpha < 0) throw std::invalid_argument("sample_lue: integer alpha >= 0 required");
    MatrixXcd x = detail::complex_gauss_matrix(n + alpha, n, g);
    MatrixXcd a = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum::from_sorted(std::move(v), false);
}

// LOE with weight x^{(a-1)/2} e^{-x/2}, a = n_rows - N integer >= 0:
// real Wishart X^T X.
inline Spectrum sample_loe(int n, int a, rng_t& g) {
    if (a < 0) throw std::invalid_argument("sample_loe: integer a >= 0 required");
    MatrixXd x = detail::real_gauss_matrix(n + a, n, g);
    MatrixXd m = x.transpose() * x;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return Spectrum(detail::sorted_eigs(es), false);
}

// JUE on (-1,1) with weight (1+x)^a (1-x)^b, integer a,b >= 0 via the
// two-Wishart construction.
inline Spectrum sample_jue(int n, int a, int b, rng_t& g) {
    if (a < 0 || b < 0) throw std::invalid_argument("sample_jue: integer a,b >= 0 required");
    MatrixXcd x1 = detail::complex_gauss_matrix(n + a, n, g);
    MatrixXcd x2 = detail::complex_gauss_matrix(n + b, n, g);
    MatrixXcd A = x1.adjoint() * x1, B = x2.adjoint() * x2;
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXcd> es(A, A + B, Eigen::EigenvaluesOnly);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = 2.0 * es.eigenvalues()[i] - 1.0;
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum::from_sorted(std::move(v), false);
}

// JOE on (-1,1) with weight (1+x)^{(a-1)/2} (1-x)^{(b-1)/2}, integer a,b >= 0.
inline Spectrum sample_joe(int n, int a, int b, rng_t& g) {
    if (a < 0 || b < 0) throw std::invalid_argument("sample_joe: integer a,b >= 0 required");
    MatrixXd x1 = detail::real_gauss_matrix(n + a, n, g);
    MatrixXd x2 = detail::real_gauss_matrix(n + b, n, g);
    MatrixXd A = x1.transpose() * x1, B = x2.transpose() * x2;
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(A, A + B, Eigen::EigenvaluesOnly);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = 2.0 * es.eigenvalues()[i] - 1.0;
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum::from_sorted(std::move(v), false);
}

// Cauchy UE with alpha = 0 and n_ref = n: stereographic image of CUE_n,
// x = tan(theta/2).
inline Spectrum sample_cauchy_ue(int n, rng_t& g) {
    Spectrum ang = sample_circular(2, n, g);
    std::vector<double> v(ang.size());
    for (std::size_t i = 0; i < ang.size(); ++i) v[i] = std::tan(0.5 * ang[i]);
    return Spectrum(std::move(v), false);
}

// Free eigen-angles in (0, pi) of Haar O^{det_sign}(n).
inline Spectrum sample_orthogonal_group(int n, int det_sign, rng_t& g) {
    if (n < 2) throw std::invalid_argument("sample_orthogonal_group: n >= 2");
    MatrixXd q = haar_orthogonal(n, det_sign, g);
    Eigen::EigenSolver<MatrixXd> es(q, false);
    if (es.info() != Eigen::Success) throw numeric_error("eigen decomposition failed");
    std::vector<double> ang;
    for (int i = 0; i < n; ++i) {
        cplx ev = es.eigenvalues()[i];
        if (ev.imag() > 1e-9) ang.push_back(std::arg(ev));
    }
    int fixed = (det_sign > 0) ? (n % 2 == 0 ? 0 : 1) : (n % 2 == 0 ? 2 : 1);
    if (static_cast<int>(ang.size()) != (n - fixed) / 2)
        throw numeric_error("sample_orthogonal_group: unexpected free angle count");
    return Spectrum(std::move(ang), true);
}

// Positive eigenvalues of an m x m antisymmetric Gaussian matrix with pure
// imaginary entries; weight e^{-x^2} (m even) or x^2 e^{-x^2} (m odd).
inline Spectrum sample_antisymmetric_gauss(int m, rng_t& g) {
    gauss_draw gd;
    MatrixXcd h = MatrixXcd::Zero(m, m);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            double a = s * gd(g);
            h(i, j) = cplx(0.0, a);
            h(j, i) = cplx(0.0, -a);
        }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> v;
    for (int i = 0; i < m; ++i)
        if (es.eigenvalues()[i] > 1e-12) v.push_back(es.eigenvalues()[i]);
    if (static_cast<int>(v.size()) != m / 2)
        throw numeric_error("sample_antisymmetric_gauss: unexpected positive count");
    return Spectrum(std::move(v), false);
}

// Bordered construction around a doubled GUE_n block: returns all 2n+1
// eigenvalues; the even-labelled ones are the embedded GUE_n.
inline Spectrum sample_bordered_gue(int n, double b, rng_t& g) {
    if (n < 1 || b <= 0.0) throw std::invalid_argument("sample_bordered_gue: n >= 1, b > 0");
    gauss_draw gd;
    // GUE_n block (weight e^{-x^2} convention)
    MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = gd(g) / std::sqrt(2.0);
        for (int j = i + 1; j < n; ++j) {
            double re = 0.5 * gd(g), im = 0.5 * gd(g);
            a(i, j) = cplx(re, im);
            a(j, i) = cplx(re, -im);
        }
    }
    int m = 2 * n + 1;
    MatrixXd big = MatrixXd::Zero(m, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            big(2 * i, 2 * j) = a(i, j).real();
            big(2 * i, 2 * j + 1) = a(i, j).imag();
            big(2 * i + 1, 2 * j) = -a(i, j).imag();
            big(2 * i + 1, 2 * j + 1) = a(i, j).real();
        }
    double sb = std::sqrt(b);
    for (int i = 0; i < 2 * n; ++i) {
        double v = sb * gd(g);
        big(i, 2 * n) = v;
        big(2 * n, i) = v;
    }
    big(2 * n, 2 * n) = std::sqrt(2.0 * b) * gd(g);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(big, Eigen::EigenvaluesOnly);
    return Spectrum(detail::sorted_eigs(es), false);
}

// Complex Wishart A = X^dag X plus the rank-one update B = A + b v v^dag.
// Returns (eigs of A, eigs of B); they interlace b_1 > a_1 > ... > b_N > a_N.
inline std::pair<Spectrum, Spectrum> sample_rank_one_wishart_pair(int n_rows, int n_cols,
                                                                  double b, rng_t& g) {
    if (n_rows < n_cols || b <= 0.0)
        throw std::invalid_argument("sample_rank_one_wishart_pair: n_rows >= n_cols, b > 0");
    MatrixXcd x = detail::complex_gauss_matrix(n_rows, n_cols, g);
    MatrixXcd a = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> ea(a, Eigen::EigenvaluesOnly);
    gauss_draw gd;
    VectorXcd v(n_cols);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n_cols; ++i) {
        double re = gd(g), im = gd(g);
        v[i] = cplx(s * re, s * im);
    }
    MatrixXcd bm = a + b * (v * v.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eb(bm, Eigen::EigenvaluesOnly);
    std::vector<double> av(ea.eigenvalues().data(), ea.eigenvalues().data() + n_cols);
    std::vector<double> bv(eb.eigenvalues().data(), eb.eigenvalues().data() + n_cols);
    std::sort(av.begin(), av.end(), std::greater<double>());
    std::sort(bv.begin(), bv.end(), std::greater<double>());
    return {Spectrum::from_sorted(std::move(av), false), Spectrum::from_sorted(std::move(bv), false)};
}

// Eigenvalues of an n x n complex Ginibre matrix scaled by 1/sqrt(n):
// leading support the unit disk.
inline std::vector<cplx> sample_ginibre_scaled(int n, rng_t& g) {
    if (n < 1) throw std::invalid_argument("sample_ginibre_scaled: n >= 1");
    MatrixXcd m = detail::complex_gauss_matrix(n, n, g);
    Eigen::ComplexEigenSolver<MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success) throw numeric_error("eigen decomposition failed");
    std::vector<cplx> z(n);
    for (int i = 0; i < n; ++i) z[i] = es.eigenvalues()[i] / std::sqrt(double(n));
    return z;
}

// ---------------------------------------------------------------------------
// Metropolis oracle on the joint density (3.0)-type log-gas, single-site
// Gaussian proposals, log-density accept/reject. Works on the line or on the
// circle (weight identically 1 there).
class MetropolisSampler {
  public:
    MetropolisSampler(double beta, const WeightSpec& w, int n, MCConfig cfg)
        : MetropolisSampler(beta,
                            [w](double x) { return w.log_evaluate(x); },
                            w.support_lo(), w.support_hi(), w.is_circular(), n, cfg) {}

    MetropolisSampler(double beta, std::function<double(double)> logw, double lo, double hi,
                      bool circ, int n, MCConfig cfg)
        : beta_(beta), logw_(std::move(logw)), lo_(lo), hi_(hi), circular_(circ), n_(n),
          g_(cfg.seed) {
        cfg.validate();
        if (beta <= 0.0) throw std::invalid_argument("metropolis: beta > 0");
        burn_in_ = cfg.burn_in >= 0 ? cfg.burn_in : 10000L * n_;
        thinning_ = cfg.thinning >= 0 ? cfg.thinning : 10L * n_;
        scale_ = cfg.proposal_scale > 0 ? cfg.proposal_scale : default_scale();
        init_state();
        long adapt_window = burn_in_ / 2;
        for (long step = 0; step < burn_in_; ++step) {
            do_step();
            if (step < adapt_window && (step + 1) % 200 == 0) adapt();
        }
        accepted_ = 0;
        proposed_ = 0;
    }

    Spectrum next() {
        for (long i = 0; i < std::max<long>(1, thinning_); ++i) do_step();
        std::vector<double> v = x_;
        return Spectrum(std::move(v), circular_);
    }

    double acceptance_rate() const {
        return proposed_ > 0 ? double(accepted_) / double(proposed_) : 0.0;
    }
    bool tuning_warning() const {
        double r = acceptance_rate();
        return proposed_ > 0 && (r < 0.05 || r > 0.95);
    }
    double proposal_scale() const { return scale_; }

  private:
    double default_scale() const {
        if (circular_) return two_pi / (n_ + 1.0) * 0.6;
        if (std::isfinite(lo_) && std::isfinite(hi_)) return (hi_ - lo_) / (n_ + 1.0) * 0.6;
        return 1.0 / std::sqrt(double(n_));
    }

    void init_state() {
        x_.resize(n_);
        if (circular_) {
            for (int i = 0; i < n_; ++i) x_[i] = wrap_angle(-pi + two_pi * (i + 0.5) / n_ + 1e-3);
        } else if (std::isfinite(lo_) && std::isfinite(hi_)) {
            for (int i = 0; i < n_; ++i) x_[i] = lo_ + (hi_ - lo_) * (i + 0.5) / n_;
        } else if (std::isfinite(lo_)) {
            for (int i = 0; i < n_; ++i) x_[i] = lo_ + 2.0 * (i + 0.5);
        } else {
            double span = 2.0 * std::sqrt(double(n_)) + 2.0;
            for (int i = 0; i < n_; ++i) x_[i] = -span + 2.0 * span * (i + 0.5) / n_;
        }
        logw_cache_.resize(n_);
        for (int i = 0; i < n_; ++i) logw_cache_[i] = logw_(x_[i]);
    }

    double log_dist(double a, double b) const {
        if (circular_) return std::log(std::abs(2.0 * std::sin(0.5 * (a - b))));
        return std::log(std::abs(a - b));
    }

    void do_step() {
        int i = site_;
        site_ = (site_ + 1) % n_;
        double xi = x_[i];
        double prop = xi + scale_ * gd_(g_);
        if (circular_) prop = wrap_angle(prop);
        ++proposed_;
        if (!circular_ && (prop <= lo_ || prop >= hi_)) return;
        double lwn = logw_(prop);
        if (std::isinf(lwn) && lwn < 0) return;
        double dlp = lwn - logw_cache_[i];
        for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            double dn = log_dist(prop, x_[j]);
            double dd = log_dist(xi, x_[j]);
            if (std::isinf(dn) && dn < 0) return;
            dlp += beta_ * (dn - dd);
        }
        if (dlp >= 0.0 || std::log(std::uniform_real_distribution<double>(0.0, 1.0)(g_)) < dlp) {
            x_[i] = prop;
            logw_cache_[i] = lwn;
            ++accepted_;
        }
    }

    void adapt() {
        double r = proposed_ > 0 ? double(accepted_) / double(proposed_) : 0.4;
        if (r < 0.25)
            scale_ *= 0.8;
        else if (r > 0.55)
            scale_ *= 1.25;
        accepted_ = 0;
        proposed_ = 0;
    }

    double beta_;
    std::function<double(double)> logw_;
    double lo_, hi_;
    bool circular_;
    int n_;
    rng_t g_;
    gauss_draw gd_;
    std::vector<double> x_, logw_cache_;
    long burn_in_ = 0, thinning_ = 1;
    double scale_ = 1.0;
    long accepted_ = 0, proposed_ = 0;
    int site_ = 0;
};

// Dispatcher over (beta, weight family) -> matrix model when available.
// Throws when only the Metropolis oracle applies (caller chooses the config).
inline Spectrum sample_hermitian(const EnsembleSpec& spec, rng_t& g) {
    spec.validate();
    if (spec.circular()) throw std::invalid_argument("sample_hermitian: weight required");
    const WeightSpec& w = *spec.weight;
    auto is_int = [](double x) { return std::abs(x - std::round(x)) < 1e-12; };
    switch (w.family()) {
        case weight_family::gaussian_beta2:
            if (spec.beta == 2.0) return sample_gue(spec.n_points, g);
            break;
        case weight_family::gaussian_beta1:
            if (spec.beta == 1.0) return sample_goe(spec.n_points, g);
            break;
        case weight_family::laguerre_beta2:
            if (spec.beta == 2.0 && is_int(w.a()) && w.a() >= 0)
                return sample_lue(spec.n_points, int(std::round(w.a())), g);
            break;
        case weight_family::laguerre_beta1:
            if (spec.beta == 1.0 && is_int(w.a()) && w.a() >= 0)
                return sample_loe(spec.n_points, int(std::round(w.a())), g);
            break;
        case weight_family::jacobi_beta2:
            if (spec.beta == 2.0 && is_int(w.a()) && is_int(w.b()) && w.a() >= 0 && w.b() >= 0)
                return sample_jue(spec.n_points, int(std::round(w.a())), int(std::round(w.b())), g);
            break;
        case weight_family::jacobi_beta1:
            if (spec.beta == 1.0 && is_int(w.a()) && is_int(w.b()) && w.a() >= 0 && w.b() >= 0)
                return sample_joe(spec.n_points, int(std::round(w.a())), int(std::round(w.b())), g);
            break;
        case weight_family::cauchy_beta2:
            if (spec.beta == 2.0 && w.a() == 0.0 && w.n_ref() == spec.n_points)
                return sample_cauchy_ue(spec.n_points, g);
            break;
        default: break;
    }
    throw std::invalid_argument("sample_hermitian: no matrix model; use the Metropolis oracle");
}

} // namespace rmt
