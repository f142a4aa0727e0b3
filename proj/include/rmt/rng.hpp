#pragma once

#include <random>
#include <complex>

#include "rmt/common.hpp"

namespace rmt {

using rng_t = std::mt19937_64;

inline rng_t make_rng(std::uint64_t seed) { return rng_t(seed); }

// Box-Muller; two uniforms per pair, deterministic consumption pattern.
class gauss_draw {
  public:
    double operator()(rng_t& g) {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = unit_(g), u2 = unit_(g);
        while (u1 <= 0.0) u1 = unit_(g);
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(two_pi * u2);
        have_ = true;
        return r * std::cos(two_pi * u2);
    }

  private:
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    double spare_ = 0.0;
    bool have_ = false;
};

inline double gauss(rng_t& g) {
    gauss_draw d;
    return d(g);
}

// standard complex gaussian: E z = 0, E|z|^2 = 1
inline cplx complex_gauss(rng_t& g) {
    gauss_draw d;
    double re = d(g);
    double im = d(g);
    return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

inline double uniform(rng_t& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

} // namespace rmt
