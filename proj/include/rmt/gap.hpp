#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rmt/common.hpp"
#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/spectrum.hpp"
#include "rmt/weights.hpp"

namespace rmt {

// Gap-probability generating function as a polynomial in (1-xi):
// E(J; xi) = sum_k c_k (1-xi)^k with c_k = E(k; J).
class GenFnPoly {
  public:
    GenFnPoly(std::vector<double> coeffs, double j_lo, double j_hi)
        : c_(std::move(coeffs)), lo_(j_lo), hi_(j_hi) {
        double sum = 0.0;
        for (auto& c : c_) {
            if (c < -1e-10) throw numeric_error("GenFnPoly: coefficient below -1e-10");
            if (c < 0.0) c = 0.0;
            sum += c;
        }
        if (std::abs(sum - 1.0) > 1e-8) throw numeric_error("GenFnPoly: coefficients do not sum to 1");
    }

    const std::vector<double>& coeffs() const { return c_; }
    double prob(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : 0.0; }
    double j_lo() const { return lo_; }
    double j_hi() const { return hi_; }

    cplx evaluate(cplx xi) const {
        cplx t = cplx(1.0, 0.0) - xi, p(1.0, 0.0), acc(0.0, 0.0);
        for (double c : c_) {
            acc += c * p;
            p *= t;
        }
        return acc;
    }

    double mean() const {
        double m = 0.0;
        for (std::size_t k = 0; k < c_.size(); ++k) m += double(k) * c_[k];
        return m;
    }
    double variance() const {
        double m = mean(), m2 = 0.0;
        for (std::size_t k = 0; k < c_.size(); ++k) m2 += double(k) * double(k) * c_[k];
        return std::max(0.0, m2 - m * m);
    }

  private:
    std::vector<double> c_;
    double lo_, hi_;
};

struct CountStats {
    double mean = 0.0;
    double variance = 0.0;
    double j_lo = 0.0, j_hi = 0.0;
};

inline CountStats counting_stats(const GenFnPoly& g) {
    return CountStats{g.mean(), g.variance(), g.j_lo(), g.j_hi()};
}

namespace detail {

// Gauss-Jacobi rule on (a,b) absorbing (x-a)^{ea} (b-x)^{eb}; weights include
// those factors.
inline QuadRule gauss_jacobi_on(int n, double a, double b, double ea, double eb) {
    QuadRule q = gauss_jacobi(n, eb, ea);  // (1-u)^alpha (1+u)^beta, u=-1 <-> x=a
    double c = 0.5 * (b - a), m = 0.5 * (a + b);
    QuadRule r;
    r.x.resize(q.size());
    r.w.resize(q.size());
    double fac = std::pow(c, 1.0 + ea + eb);
    for (std::size_t i = 0; i < q.size(); ++i) {
        r.x[i] = m + c * q.x[i];
        r.w[i] = fac * q.w[i];
    }
    return r;
}

// Overlap matrix G_jk = int_J phi_j phi_k for the weighted orthonormal
// functions of `basis`, J = (a,b) inside the support. Endpoint power-law
// factors of the weight are absorbed into Gauss-Jacobi rules when J touches
// the support boundary; the half line is mapped rationally.
inline Eigen::MatrixXd overlap_matrix(const OPBasis& basis, int n_funcs, double a, double b,
                                      double tol = 5e-14) {
    const WeightSpec& w = basis.weight();
    double slo = w.support_lo(), shi = w.support_hi();
    a = std::max(a, slo);
    if (std::isfinite(shi)) b = std::min(b, shi);
    double ea = (a == slo && std::isfinite(slo)) ? w.exponent_at_lo() : 0.0;
    double eb = (std::isfinite(shi) && b == shi) ? w.exponent_at_hi() : 0.0;
    bool half_line = !std::isfinite(b);

    Eigen::MatrixXd prev;
    std::vector<double> ph(n_funcs);
    for (int n = 48; n <= 3072; n *= 2) {
        QuadRule q;
        if (half_line)
            q = map_to_half_line(gauss_legendre(n), a);
        else if (ea != 0.0 || eb != 0.0)
            q = gauss_jacobi_on(n, a, b, ea, eb);
        else
            q = map_to_interval(gauss_legendre(n), a, b);
        Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n_funcs, n_funcs);
        for (std::size_t i = 0; i < q.size(); ++i) {
            double x = q.x[i];
            double lw = w.log_evaluate(x);
            if (ea != 0.0) lw -= ea * std::log(x - a);
            if (eb != 0.0) lw -= eb * std::log(b - x);
            if (std::isinf(lw)) continue;
            basis.orthonormal(x, n_funcs, ph.data());
            double wx = q.w[i] * std::exp(lw);
            for (int r = 0; r < n_funcs; ++r)
                for (int c = r; c < n_funcs; ++c) G(r, c) += wx * ph[r] * ph[c];
        }
        G = G.selfadjointView<Eigen::Upper>();
        if (prev.size() > 0 && (G - prev).cwiseAbs().maxCoeff() < tol) return G;
        prev = G;
    }
    return prev;
}

inline std::vector<double> overlap_eigs(const Eigen::MatrixXd& G) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + G.rows());
    for (double l : lam)
        if (l < -1e-8 || l > 1.0 + 1e-8)
            throw numeric_error("overlap eigenvalue outside [0,1]");
    return lam;
}

inline cplx det_one_minus_xi(const std::vector<double>& lam, cplx xi) {
    cplx d(1.0, 0.0);
    for (double l : lam) d *= (cplx(1.0, 0.0) - xi * l);
    return d;
}

// E(k) coefficients from overlap eigenvalues: expand prod((1-l) + t l).
inline std::vector<double> gap_coeffs_from_eigs(const std::vector<double>& lam) {
    std::vector<double> c{1.0};
    for (double l : lam) {
        double lc = std::clamp(l, 0.0, 1.0);
        std::vector<double> nc(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            nc[k] += c[k] * (1.0 - lc);
            nc[k + 1] += c[k] * lc;
        }
        c = std::move(nc);
    }
    return c;
}

} // namespace detail

// det[ delta_jk - xi int_J phi_j phi_k ] for a beta=2 weight with an
// orthogonal-polynomial basis; J may touch the support boundary or extend to
// +infinity.
inline cplx genfn_ue(const WeightSpec& w, int n, double j_lo, double j_hi, cplx xi) {
    if (n < 1) throw std::invalid_argument("genfn_ue: n >= 1");
    if (!(j_hi > j_lo)) return cplx(1.0, 0.0);
    OPBasis basis(w, n);
    Eigen::MatrixXd G = detail::overlap_matrix(basis, n, j_lo, j_hi);
    return detail::det_one_minus_xi(detail::overlap_eigs(G), xi);
}

inline GenFnPoly genfn_poly(const WeightSpec& w, int n, double j_lo, double j_hi) {
    if (n < 1) throw std::invalid_argument("genfn_poly: n >= 1");
    if (!(j_hi > j_lo)) {
        std::vector<double> c(n + 1, 0.0);
        c[0] = 1.0;
        return GenFnPoly(std::move(c), j_lo, j_hi);
    }
    OPBasis basis(w, n);
    Eigen::MatrixXd G = detail::overlap_matrix(basis, n, j_lo, j_hi);
    return GenFnPoly(detail::gap_coeffs_from_eigs(detail::overlap_eigs(G)), j_lo, j_hi);
}

// CUE_N arc overlap matrix in the Fourier basis e^{ij theta}/sqrt(2 pi):
// exact closed-form entries, no quadrature.
inline std::vector<double> cue_arc_eigs(int n, double phi) {
    Eigen::MatrixXcd G(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            int d = j - k;
            if (d == 0)
                G(j, k) = phi / two_pi;
            else
                G(j, k) = (std::exp(cplx(0.0, d * phi)) - cplx(1.0, 0.0)) / cplx(0.0, d * two_pi);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
    std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return lam;
}

inline cplx genfn_cue(int n, double phi, cplx xi) {
    if (n < 1) throw std::invalid_argument("genfn_cue: n >= 1");
    if (phi <= 0.0) return cplx(1.0, 0.0);
    return detail::det_one_minus_xi(cue_arc_eigs(n, phi), xi);
}

inline GenFnPoly genfn_poly_cue(int n, double phi) {
    if (phi <= 0.0) {
        std::vector<double> c(n + 1, 0.0);
        c[0] = 1.0;
        return GenFnPoly(std::move(c), 0.0, phi);
    }
    return GenFnPoly(detail::gap_coeffs_from_eigs(cue_arc_eigs(n, phi)), 0.0, phi);
}

// ---------------------------------------------------------------------------
// Haar orthogonal groups: eigen-angle generating functions. In x = cos(theta)
// the free angles form a beta=2 Jacobi ensemble; the classification of
// (a, b) in the weight (1+x)^a (1-x)^b and the free-angle count:
//   O^+(2N):   a=-1/2, b=-1/2, N free
//   O^+(2N+1): a=-1/2, b=+1/2, N free   (+1 fixed eigenvalue)
//   O^-(2N+1): a=+1/2, b=-1/2, N free   (-1 fixed)
//   O^-(2N+2): a=+1/2, b=+1/2, N free   (+1 and -1 fixed)
struct OGroupParams {
    double a, b;
    int n_free;
};

inline OGroupParams o_group_params(int n, int det_sign) {
    if (n < 1) throw std::invalid_argument("o_group_params: n >= 1");
    if (det_sign > 0)
        return n % 2 == 0 ? OGroupParams{-0.5, -0.5, n / 2} : OGroupParams{-0.5, 0.5, (n - 1) / 2};
    return n % 2 == 1 ? OGroupParams{0.5, -0.5, (n - 1) / 2} : OGroupParams{0.5, 0.5, (n - 2) / 2};
}

// Overlap of the Jacobi basis on angles (0, theta), integrated in the angle
// variable where the integrand is smooth for all four (a,b) sign choices.
inline std::vector<double> o_group_arc_eigs(int n, int det_sign, double theta,
                                            double tol = 5e-15) {
    OGroupParams p = o_group_params(n, det_sign);
    if (p.n_free == 0 || theta <= 0.0) return {};
    WeightSpec w = WeightSpec::jacobi_b2(p.a, p.b);
    OPBasis basis(w, p.n_free);
    int F = p.n_free;
    Eigen::MatrixXd prev;
    std::vector<double> ph(F);
    for (int nq = 64; nq <= 4096; nq *= 2) {
        QuadRule q = map_to_interval(gauss_legendre(nq), 0.0, theta);
        Eigen::MatrixXd G = Eigen::MatrixXd::Zero(F, F);
        for (std::size_t i = 0; i < q.size(); ++i) {
            double u = q.x[i], x = std::cos(u);
            basis.orthonormal(x, F, ph.data());
            // w(cos u) sin u, written in half-angle form to stay smooth at u=0
            double su = std::sin(0.5 * u), cu = std::cos(0.5 * u);
            double wu = std::pow(2.0 * cu * cu, p.a) * std::pow(2.0 * su * su, p.b) *
                        (2.0 * su * cu);
            double wx = q.w[i] * wu;
            for (int r = 0; r < F; ++r)
                for (int c = r; c < F; ++c) G(r, c) += wx * ph[r] * ph[c];
        }
        G = G.selfadjointView<Eigen::Upper>();
        if (prev.size() > 0 && (G - prev).cwiseAbs().maxCoeff() < tol)
            return detail::overlap_eigs(G);
        prev = G;
    }
    return detail::overlap_eigs(prev);
}

// Generating function for the number of eigen-angles of O^{det_sign}(n) in
// (0, theta), 0 <= theta <= pi.
inline cplx genfn_orthogonal_group(int n, int det_sign, double theta, cplx xi) {
    if (theta < 0.0 || theta > pi + 1e-12)
        throw std::invalid_argument("genfn_orthogonal_group: 0 <= theta <= pi");
    return detail::det_one_minus_xi(o_group_arc_eigs(n, det_sign, theta), xi);
}

inline GenFnPoly genfn_poly_orthogonal_group(int n, int det_sign, double theta) {
    auto lam = o_group_arc_eigs(n, det_sign, theta);
    return GenFnPoly(detail::gap_coeffs_from_eigs(lam), 0.0, theta);
}

// COE_N gap generating function on (0, phi) through the orthogonal-group
// determinants: with xh = 2 xi - xi^2 and nu = (-1)^N,
//   E^{COE_N}((0,phi); xi) =
//     [ (1-xi) E^{O^nu(N+1)}((0,phi/2); xh) + E^{O^{-nu}(N+1)}((0,phi/2); xh) ] / (2-xi)
inline cplx genfn_coe(int n, double phi, cplx xi) {
    if (n < 1) throw std::invalid_argument("genfn_coe: n >= 1");
    cplx xh = 2.0 * xi - xi * xi;
    int nu = (n % 2 == 0) ? +1 : -1;
    cplx e_nu = genfn_orthogonal_group(n + 1, nu, 0.5 * phi, xh);
    cplx e_mnu = genfn_orthogonal_group(n + 1, -nu, 0.5 * phi, xh);
    return ((cplx(1.0, 0.0) - xi) * e_nu + e_mnu) / (cplx(2.0, 0.0) - xi);
}

// CSE_N gap generating function on the symmetric arc (-theta, theta):
//   E^{CSE_N}((-theta,theta); xi) =
//     ( E^{O^+(2N+1)}((0,theta); xi) + E^{O^-(2N+1)}((0,theta); xi) ) / 2
inline cplx genfn_cse(int n, double theta, cplx xi) {
    if (n < 1) throw std::invalid_argument("genfn_cse: n >= 1");
    cplx ep = genfn_orthogonal_group(2 * n + 1, +1, theta, xi);
    cplx em = genfn_orthogonal_group(2 * n + 1, -1, theta, xi);
    return 0.5 * (ep + em);
}

// ---------------------------------------------------------------------------
// Brute-force oracle: direct ordered quadrature of the joint density (any
// beta > 0) at n <= 4, returning the whole vector {E(k; J)} in one pass.
// Integration runs over the ordered sector x_1 > ... > x_n with the domain
// split at the indicator boundaries, so every panel integrand is smooth.
class BruteForceGap {
  public:
    // circular ensemble on (-pi, pi]
    static std::vector<double> circular(double beta, int n, double j_lo, double j_hi,
                                        int nodes = 24) {
        BruteForceGap bf;
        bf.beta_ = beta;
        bf.n_ = n;
        bf.circular_ = true;
        bf.lo_ = -pi;
        bf.hi_ = pi;
        bf.jlo_ = j_lo;
        bf.jhi_ = j_hi;
        bf.logw_ = [](double) { return 0.0; };
        return bf.run(nodes);
    }

    // real-line ensemble with a classical weight
    static std::vector<double> hermitian(double beta, const WeightSpec& w, int n, double j_lo,
                                         double j_hi, int nodes = 24) {
        BruteForceGap bf;
        bf.beta_ = beta;
        bf.n_ = n;
        bf.circular_ = false;
        bf.jlo_ = j_lo;
        bf.jhi_ = j_hi;
        switch (w.family()) {
            case weight_family::cauchy_beta1:
            case weight_family::cauchy_beta2: {
                // compactify with x = tan(v)
                bf.transform_ = [](double v) { return std::tan(v); };
                bf.lo_ = -0.5 * pi;
                bf.hi_ = 0.5 * pi;
                bf.jlo_ = std::atan(j_lo);
                bf.jhi_ = std::atan(j_hi);
                bf.logw_ = [w](double v) {
                    return w.log_evaluate(std::tan(v)) - 2.0 * std::log(std::cos(v));
                };
                break;
            }
            default: {
                double slo = w.support_lo(), shi = w.support_hi();
                bf.lo_ = std::isfinite(slo) ? slo : -clip_box(w, n);
                bf.hi_ = std::isfinite(shi) ? shi : clip_box(w, n);
                bf.jlo_ = std::max(j_lo, bf.lo_);
                bf.jhi_ = std::min(j_hi, bf.hi_);
                bf.logw_ = [w](double x) { return w.log_evaluate(x); };
            }
        }
        return bf.run(nodes);
    }

    static cplx genfn(const std::vector<double>& probs, cplx xi) {
        cplx t = cplx(1.0, 0.0) - xi, p(1.0, 0.0), acc(0.0, 0.0);
        for (double c : probs) {
            acc += c * p;
            p *= t;
        }
        return acc;
    }

  private:
    static double clip_box(const WeightSpec& w, int n) {
        switch (w.family()) {
            case weight_family::gaussian_beta1:
            case weight_family::gaussian_beta2: return 2.5 * std::sqrt(double(n)) + 8.0;
            case weight_family::laguerre_beta1:
            case weight_family::laguerre_beta2: return 12.0 * n + 60.0;
            default: return 1.0;
        }
    }

    std::vector<double> run(int nodes) const {
        if (n_ < 1 || n_ > 5) throw std::invalid_argument("brute force limited to n <= 5");
        std::vector<double> prev;
        for (int nq = nodes;; nq = (3 * nq) / 2) {
            std::vector<double> buckets(n_ + 1, 0.0);
            const QuadRule& base = gauss_legendre(nq);
            std::vector<double> pts, xs;
            recurse(base, hi_, 0, 1.0, pts, xs, buckets);
            double z = 0.0;
            for (double b : buckets) z += b;
            std::vector<double> probs(n_ + 1);
            for (int k = 0; k <= n_; ++k) probs[k] = buckets[k] / z;
            if (!prev.empty()) {
                double d = 0.0;
                for (int k = 0; k <= n_; ++k) d = std::max(d, std::abs(probs[k] - prev[k]));
                if (d < 2e-8) return probs;
            }
            prev = std::move(probs);
            if (nq >= 130) return prev;  // budget guard; accuracy pinned by tests
        }
    }

    double pair_factor(double d) const {
        if (beta_ == 1.0) return d;
        if (beta_ == 2.0) return d * d;
        if (beta_ == 4.0) {
            double d2 = d * d;
            return d2 * d2;
        }
        return std::pow(d, beta_);
    }

    void recurse(const QuadRule& base, double upper, int depth, double partial,
                 std::vector<double>& pts, std::vector<double>& xs,
                 std::vector<double>& buckets) const {
        // segment boundaries below `upper`, split at the indicator edges
        double brk[4];
        int nb = 0;
        brk[nb++] = lo_;
        if (jlo_ > lo_ && jlo_ < upper) brk[nb++] = jlo_;
        if (jhi_ > lo_ && jhi_ < upper) brk[nb++] = jhi_;
        brk[nb++] = upper;
        pts.push_back(0.0);
        xs.push_back(0.0);
        for (int s = 0; s + 1 < nb; ++s) {
            double a = brk[s], b = brk[s + 1];
            if (!(b > a)) continue;
            double c = 0.5 * (b - a), m = 0.5 * (a + b);
            for (std::size_t i = 0; i < base.size(); ++i) {
                double u = m + c * base.x[i];
                double xu = transform_ ? transform_(u) : u;
                double wgt = c * base.w[i] * std::exp(logw_(u));
                double prod = partial * wgt;
                for (std::size_t d = 0; d + 1 < pts.size(); ++d) {
                    double dd = circular_ ? std::abs(2.0 * std::sin(0.5 * (pts[d] - u)))
                                          : std::abs(xs[d] - xu);
                    prod *= pair_factor(dd);
                }
                pts.back() = u;
                xs.back() = xu;
                if (depth == n_ - 1) {
                    int k = 0;
                    for (double v : pts)
                        if (v > jlo_ && v < jhi_) ++k;
                    buckets[k] += prod;
                } else {
                    recurse(base, u, depth + 1, prod, pts, xs, buckets);
                }
            }
        }
        pts.pop_back();
        xs.pop_back();
    }

    double beta_ = 2.0;
    int n_ = 1;
    bool circular_ = false;
    double lo_ = 0, hi_ = 0, jlo_ = 0, jhi_ = 0;
    std::function<double(double)> logw_;
    std::function<double(double)> transform_;
};

// Empirical count distribution in J over sampled spectra.
struct CountDistribution {
    std::vector<double> freq;
    std::vector<double> se;
    long n_samples = 0;
    double mean = 0.0, variance = 0.0;
};

template <class Sampler>
CountDistribution mc_gap_counts(Sampler&& sample, double j_lo, double j_hi, long n_samples) {
    std::vector<long> counts;
    double s1 = 0.0, s2 = 0.0;
    for (long i = 0; i < n_samples; ++i) {
        Spectrum s = sample();
        int k = s.count_in(j_lo, j_hi);
        if (k >= int(counts.size())) counts.resize(k + 1, 0);
        ++counts[k];
        s1 += k;
        s2 += double(k) * k;
    }
    CountDistribution d;
    d.n_samples = n_samples;
    d.freq.resize(counts.size());
    d.se.resize(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        double p = double(counts[k]) / double(n_samples);
        d.freq[k] = p;
        d.se[k] = std::sqrt(std::max(p * (1.0 - p), 1e-300) / double(n_samples));
    }
    d.mean = s1 / double(n_samples);
    d.variance = s2 / double(n_samples) - d.mean * d.mean;
    return d;
}

} // namespace rmt
