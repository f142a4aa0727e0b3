#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "rmt/common.hpp"

namespace rmt {

enum class weight_family {
    gaussian_beta1,  // e^{-x^2/2} on R
    gaussian_beta2,  // e^{-x^2} on R
    laguerre_beta1,  // x^{(a-1)/2} e^{-x/2} on (0,inf)
    laguerre_beta2,  // x^a e^{-x} on (0,inf)
    jacobi_beta1,    // (1+x)^{(a-1)/2} (1-x)^{(b-1)/2} on (-1,1)
    jacobi_beta2,    // (1+x)^a (1-x)^b on (-1,1)
    cauchy_beta1,    // (1+x^2)^{-(N+a+1)/2} on R, real parameter
    cauchy_beta2,    // (1+x^2)^{-(N+a)} on R
    jacobi_unit,     // x^a (1-x)^b on (0,1)
    circular,        // constant on angles
};

// A classical weight w(x) together with its support. Evaluation is done in
// log space; evaluate() returns 0 outside the support.
class WeightSpec {
  public:
    static WeightSpec gaussian_b1() { return WeightSpec(weight_family::gaussian_beta1, 0, 0, 0); }
    static WeightSpec gaussian_b2() { return WeightSpec(weight_family::gaussian_beta2, 0, 0, 0); }
    static WeightSpec laguerre_b1(double a) {
        require(a > -1.0, "laguerre parameter must satisfy a > -1");
        return WeightSpec(weight_family::laguerre_beta1, a, 0, 0);
    }
    static WeightSpec laguerre_b2(double a) {
        require(a > -1.0, "laguerre parameter must satisfy a > -1");
        return WeightSpec(weight_family::laguerre_beta2, a, 0, 0);
    }
    static WeightSpec jacobi_b1(double a, double b) {
        require(a > -1.0 && b > -1.0, "jacobi parameters must satisfy a,b > -1");
        return WeightSpec(weight_family::jacobi_beta1, a, b, 0);
    }
    static WeightSpec jacobi_b2(double a, double b) {
        require(a > -1.0 && b > -1.0, "jacobi parameters must satisfy a,b > -1");
        return WeightSpec(weight_family::jacobi_beta2, a, b, 0);
    }
    static WeightSpec cauchy_b1(double alpha, int n_ref) {
        require(n_ref + alpha > 0.0, "cauchy weight not integrable");
        return WeightSpec(weight_family::cauchy_beta1, alpha, 0, n_ref);
    }
    static WeightSpec cauchy_b2(double alpha, int n_ref) {
        require(2.0 * (n_ref + alpha) > 1.0, "cauchy weight not integrable");
        return WeightSpec(weight_family::cauchy_beta2, alpha, 0, n_ref);
    }
    static WeightSpec jacobi_unit(double a, double b) {
        require(a > -1.0 && b > -1.0, "jacobi parameters must satisfy a,b > -1");
        return WeightSpec(weight_family::jacobi_unit, a, b, 0);
    }
    static WeightSpec circular_flag() { return WeightSpec(weight_family::circular, 0, 0, 0); }

    weight_family family() const { return family_; }
    double a() const { return a_; }
    double b() const { return b_; }
    int n_ref() const { return n_ref_; }

    double support_lo() const {
        switch (family_) {
            case weight_family::gaussian_beta1:
            case weight_family::gaussian_beta2:
            case weight_family::cauchy_beta1:
            case weight_family::cauchy_beta2: return -std::numeric_limits<double>::infinity();
            case weight_family::laguerre_beta1:
            case weight_family::laguerre_beta2:
            case weight_family::jacobi_unit: return 0.0;
            case weight_family::jacobi_beta1:
            case weight_family::jacobi_beta2: return -1.0;
            case weight_family::circular: return -pi;
        }
        return 0.0;
    }
    double support_hi() const {
        switch (family_) {
            case weight_family::gaussian_beta1:
            case weight_family::gaussian_beta2:
            case weight_family::cauchy_beta1:
            case weight_family::cauchy_beta2:
            case weight_family::laguerre_beta1:
            case weight_family::laguerre_beta2: return std::numeric_limits<double>::infinity();
            case weight_family::jacobi_beta1:
            case weight_family::jacobi_beta2:
            case weight_family::jacobi_unit: return 1.0;
            case weight_family::circular: return pi;
        }
        return 0.0;
    }

    // Power-law exponent of the weight at a finite support endpoint (0 when
    // the weight is regular there). Used to pick quadrature rules that absorb
    // endpoint singularities.
    double exponent_at_lo() const {
        switch (family_) {
            case weight_family::laguerre_beta1: return 0.5 * (a_ - 1.0);
            case weight_family::laguerre_beta2: return a_;
            case weight_family::jacobi_beta1: return 0.5 * (a_ - 1.0);
            case weight_family::jacobi_beta2: return a_;
            case weight_family::jacobi_unit: return a_;
            default: return 0.0;
        }
    }
    double exponent_at_hi() const {
        switch (family_) {
            case weight_family::jacobi_beta1: return 0.5 * (b_ - 1.0);
            case weight_family::jacobi_beta2: return b_;
            case weight_family::jacobi_unit: return b_;
            default: return 0.0;
        }
    }

    bool in_support(double x) const { return x > support_lo() && x < support_hi(); }

    double log_evaluate(double x) const {
        if (!in_support(x)) return -std::numeric_limits<double>::infinity();
        switch (family_) {
            case weight_family::gaussian_beta1: return -0.5 * x * x;
            case weight_family::gaussian_beta2: return -x * x;
            case weight_family::laguerre_beta1: return 0.5 * (a_ - 1.0) * std::log(x) - 0.5 * x;
            case weight_family::laguerre_beta2: return a_ * std::log(x) - x;
            case weight_family::jacobi_beta1:
                return 0.5 * (a_ - 1.0) * std::log1p(x) + 0.5 * (b_ - 1.0) * std::log1p(-x);
            case weight_family::jacobi_beta2: return a_ * std::log1p(x) + b_ * std::log1p(-x);
            case weight_family::cauchy_beta1:
                return -0.5 * (n_ref_ + a_ + 1.0) * std::log1p(x * x);
            case weight_family::cauchy_beta2: return -(n_ref_ + a_) * std::log1p(x * x);
            case weight_family::jacobi_unit: return a_ * std::log(x) + b_ * std::log1p(-x);
            case weight_family::circular: return 0.0;
        }
        return -std::numeric_limits<double>::infinity();
    }

    double evaluate(double x) const {
        double l = log_evaluate(x);
        return std::isinf(l) && l < 0 ? 0.0 : std::exp(l);
    }

    bool is_circular() const { return family_ == weight_family::circular; }

  private:
    WeightSpec(weight_family f, double a, double b, int n_ref)
        : family_(f), a_(a), b_(b), n_ref_(n_ref) {}
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }

    weight_family family_;
    double a_ = 0, b_ = 0;
    int n_ref_ = 0;
};

// Monte Carlo configuration for the Metropolis sampler.
struct MCConfig {
    std::uint64_t seed = 1;
    int n_samples = 1;
    long burn_in = -1;        // -1: default 10^4 * N single-site steps
    long thinning = -1;       // -1: default 10 * N single-site steps
    double proposal_scale = 0.0;  // <= 0: family default
    void validate() const {
        if (n_samples < 1) throw std::invalid_argument("n_samples >= 1 required");
        if (proposal_scale < 0.0) throw std::invalid_argument("proposal_scale must be > 0");
    }
};

struct EnsembleSpec {
    double beta = 2.0;
    int n_points = 1;
    std::optional<WeightSpec> weight;  // empty means circular
    void validate() const {
        if (beta <= 0.0) throw std::invalid_argument("beta must be > 0");
        if (n_points < 1) throw std::invalid_argument("n_points >= 1 required");
    }
    bool circular() const { return !weight.has_value() || weight->is_circular(); }
};

} // namespace rmt
