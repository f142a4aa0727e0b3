#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "rmt/common.hpp"

namespace rmt {

struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

namespace detail {

// Gauss-Legendre nodes on (-1,1) by Newton iteration on P_n.
inline QuadRule gauss_legendre_raw(int n) {
    QuadRule q;
    q.x.resize(n);
    q.w.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        q.x[i] = -z;
        q.x[n - 1 - i] = z;
        q.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        q.w[n - 1 - i] = q.w[i];
    }
    return q;
}

} // namespace detail

// Cached Gauss-Legendre rule on (-1,1).
inline const QuadRule& gauss_legendre(int n) {
    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::gauss_legendre_raw(n)).first;
    return it->second;
}

// Gauss-Jacobi rule on (-1,1) for weight (1-x)^alpha (1+x)^beta, via the
// Golub-Welsch eigenvalue method on the monic Jacobi recurrence.
inline QuadRule gauss_jacobi(int n, double alpha, double beta) {
    Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
    auto ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            diag[0] = (beta - alpha) / (ab + 2.0);
        else
            diag[k] = (beta * beta - alpha * alpha) /
                      ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double bk;
        if (k == 1)
            bk = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else {
            double d = 2.0 * k + ab;
            bk = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (d * d * (d * d - 1.0));
        }
        sub[k - 1] = std::sqrt(bk);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub);
    // total mass 2^{a+b+1} B(a+1, b+1)
    double logm0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                   std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
    double m0 = std::exp(logm0);
    QuadRule q;
    q.x.resize(n);
    q.w.resize(n);
    for (int i = 0; i < n; ++i) {
        q.x[i] = es.eigenvalues()[i];
        double v = es.eigenvectors()(0, i);
        q.w[i] = m0 * v * v;
    }
    return q;
}

// Map a (-1,1) rule to (a,b).
inline QuadRule map_to_interval(const QuadRule& q, double a, double b) {
    QuadRule r;
    r.x.resize(q.size());
    r.w.resize(q.size());
    double c = 0.5 * (b - a), m = 0.5 * (a + b);
    for (std::size_t i = 0; i < q.size(); ++i) {
        r.x[i] = m + c * q.x[i];
        r.w[i] = c * q.w[i];
    }
    return r;
}

// Rule for (a, +inf) via x = a + t/(1-t), t in (0,1).
inline QuadRule map_to_half_line(const QuadRule& q, double a) {
    QuadRule r;
    r.x.resize(q.size());
    r.w.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        double t = 0.5 * (q.x[i] + 1.0);
        double wt = 0.5 * q.w[i];
        double om = 1.0 - t;
        r.x[i] = a + t / om;
        r.w[i] = wt / (om * om);
    }
    return r;
}

// Rule for the whole line via x = t/(1-t^2) on t in (-1,1).
inline QuadRule map_to_real_line(const QuadRule& q) {
    QuadRule r;
    r.x.resize(q.size());
    r.w.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        double t = q.x[i];
        double d = 1.0 - t * t;
        r.x[i] = t / d;
        r.w[i] = q.w[i] * (1.0 + t * t) / (d * d);
    }
    return r;
}

template <class F>
double integrate_rule(const QuadRule& q, F&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.w[i] * f(q.x[i]);
    return s;
}

// Integrate a smooth function on (a,b), doubling the node count until two
// successive results agree within tol (absolute + relative mix).
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol = 1e-12, int n0 = 32,
                          int nmax = 4096) {
    double prev = 0.0;
    bool have = false;
    for (int n = n0; n <= nmax; n *= 2) {
        QuadRule q = map_to_interval(gauss_legendre(n), a, b);
        double v = integrate_rule(q, f);
        if (have && std::abs(v - prev) <= tol * std::max(1.0, std::abs(v))) return v;
        prev = v;
        have = true;
    }
    return prev;
}

} // namespace rmt
