#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rmt/gap.hpp"
#include "rmt/scaling.hpp"

using namespace rmt;

TEST_CASE("sine genfn trivial values") {
    REQUIRE(std::abs(sine_genfn(+1, 0.0, 0.7) - 1.0) < 1e-14);
    REQUIRE(std::abs(sine_genfn(-1, 1.3, 0.0) - 1.0) < 1e-14);
}

TEST_CASE("sine genfn product formula against the symmetric-interval determinant") {
    for (double s : {0.7, 1.6, 3.0})
        for (double xi : {0.4, 1.0}) {
            cplx prod = sine_genfn(+1, 0.5 * s, xi) * sine_genfn(-1, 0.5 * s, xi);
            cplx full = nystrom_fredholm_det(full_sine_kernel(), -0.5 * s, 0.5 * s, xi).value;
            REQUIRE(std::abs(prod - full) < 1e-9);
        }
}

TEST_CASE("sine genfn monotone decreasing in s for z in (0,1]") {
    for (int sign : {+1, -1}) {
        double prev = 2.0;
        for (double s : {0.2, 0.6, 1.0, 1.6, 2.4}) {
            double v = std::real(sine_genfn(sign, s, 1.0));
            REQUIRE(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("bulk coe/cse generating functions: limits and range") {
    REQUIRE(std::abs(coe_bulk_genfn(0.0, 0.7) - 1.0) < 1e-14);
    REQUIRE(std::abs(coe_bulk_genfn(1.2, 0.0) - 1.0) < 1e-12);
    REQUIRE(std::abs(cse_bulk_genfn(0.0, 0.9) - 1.0) < 1e-14);
    for (double s : {0.5, 1.5})
        for (double xi : {0.3, 1.0}) {
            double v = std::real(coe_bulk_genfn(s, xi));
            REQUIRE(v > 0.0);
            REQUIRE(v <= 1.0 + 1e-12);
        }
}

TEST_CASE("finite-n orthogonal group genfn converges to the sine determinant") {
    // (0, pi s / N) at N grows -> E^{O^pm}((0,s); z)
    double s = 1.0, xi = 1.0;
    for (int sign : {+1, -1}) {
        cplx lim = sine_genfn(sign, s, xi);
        double prev_err = 1e9;
        for (int n : {8, 16, 32, 64}) {
            cplx fin = genfn_orthogonal_group(2 * n + 1, sign, pi * s / n, xi);
            double err = std::abs(fin - lim);
            REQUIRE(err < prev_err);
            prev_err = err;
            if (n == 64) REQUIRE(err < 1e-3);
        }
    }
}

TEST_CASE("finite-n to bulk coe convergence at n=64") {
    double s = 1.0, xi = 1.0;
    cplx lim = coe_bulk_genfn(s, xi);
    cplx fin = genfn_coe(64, two_pi * s / 64.0, xi);
    REQUIRE(std::abs(fin - lim) < 1e-3);
}

TEST_CASE("power spectrum: integrand at s=0 is 1 and values behave") {
    cplx xi = cplx(1.0, 0.0) - std::exp(cplx(0.0, 1.0));
    REQUIRE(std::abs(coe_bulk_genfn(0.0, xi) - 1.0) < 1e-14);

    PowerSpectrumResult r1 = power_spectrum_coe(1.0);
    REQUIRE(r1.value > 0.0);
    PowerSpectrumResult r3 = power_spectrum_coe(3.0);
    REQUIRE(r3.value > 0.0);
    // small-omega leading behavior ~ 1/(pi omega)
    PowerSpectrumResult r02 = power_spectrum_coe(0.2);
    REQUIRE(std::abs(r02.value - 1.0 / (pi * 0.2)) / (1.0 / (pi * 0.2)) < 0.10);
}
