#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rmt/fredholm.hpp"
#include "rmt/gap.hpp"

using namespace rmt;

TEST_CASE("fredholm det trivial cases") {
    ContinuousKernel k = full_sine_kernel();
    REQUIRE(std::abs(nystrom_fredholm_det(k, 0.0, 1.3, 0.0).value - 1.0) < 1e-14);
    REQUIRE(std::abs(nystrom_fredholm_det(k, 0.0, 0.0, 1.0).value - 1.0) < 1e-14);
}

TEST_CASE("sine kernel even/odd split reproduces the full determinant") {
    // det(I - xi K) on (-L, L) factorizes into the two half-interval kernels
    for (double s : {0.8, 2.0})
        for (double xi : {0.5, 1.0}) {
            double L = 0.5 * s;
            cplx full = nystrom_fredholm_det(full_sine_kernel(), -L, L, xi).value;
            cplx prod = nystrom_fredholm_det(sine_kernel(+1), 0.0, L, xi).value *
                        nystrom_fredholm_det(sine_kernel(-1), 0.0, L, xi).value;
            REQUIRE(std::abs(full - prod) < 1e-9);
        }
}

TEST_CASE("nystrom det invariant under affine reparametrization") {
    // kernel on (a,b) mapped to (0,1) with the compensating jacobian
    double a = 0.3, b = 1.7;
    ContinuousKernel base = sine_kernel(+1);
    cplx direct = nystrom_fredholm_det(base, a, b, 0.9).value;
    double len = b - a;
    ContinuousKernel mapped{
        [&, len](double u, double v) { return len * base.off(a + len * u, a + len * v); },
        [&, len](double u) { return len * base.diag(a + len * u); }};
    cplx remap = nystrom_fredholm_det(mapped, 0.0, 1.0, 0.9).value;
    REQUIRE(std::abs(direct - remap) < 1e-10);
}

TEST_CASE("projection kernel determinant is a polynomial in xi of degree <= n") {
    // finite-n cd kernel: evaluate at n+2 points, divided differences of
    // order n+1 must vanish
    int n = 3;
    CDKernel cd(WeightSpec::gaussian_b2(), n);
    ContinuousKernel k{[&](double x, double y) { return cd(x, y); },
                       [&](double x) { return cd.diag(x); }};
    std::vector<double> xs, vals;
    for (int i = 0; i <= n + 1; ++i) {
        double xi = 0.2 + 0.3 * i;
        xs.push_back(xi);
        vals.push_back(std::real(nystrom_fredholm_det(k, -1.1, 0.9, xi).value));
    }
    // divided differences
    std::vector<double> dd = vals;
    for (int order = 1; order <= n + 1; ++order)
        for (int i = 0; i + order < int(dd.size()); ++i)
            dd[i] = (dd[i + 1] - dd[i]) / (xs[i + order] - xs[i]);
    REQUIRE(std::abs(dd[0]) < 1e-7);
}

TEST_CASE("discretized projection kernel eigenvalues lie in [0,1]") {
    int n = 4;
    CDKernel cd(WeightSpec::laguerre_b2(1.0), n);
    ContinuousKernel k{[&](double x, double y) { return cd(x, y); },
                       [&](double x) { return cd.diag(x); }};
    NystromOperator op(k, 0.5, 6.0, 1e-12);
    for (double l : op.eigenvalues()) {
        REQUIRE(l > -1e-8);
        REQUIRE(l < 1.0 + 1e-8);
    }
}

TEST_CASE("discrete bessel kernel: series equals the displayed quotient") {
    DiscreteBesselKernel k(1.7);
    for (auto [a, b] : {std::pair{1, 3}, std::pair{2, 7}, std::pair{0, 1}})
        REQUIRE(k(a, b) == Catch::Approx(k.quotient_form(a, b)).margin(1e-13));
    REQUIRE(k(4, 2) == Catch::Approx(k(2, 4)).margin(1e-15));
}

TEST_CASE("discrete dets: trivial values and truncation stability") {
    DiscreteBesselKernel k(2.0);
    auto entry = [&](int a, int b) { return k(a, b); };
    REQUIRE(std::abs(discrete_det_semi_infinite(entry, 3, 0.0) - 1.0) < 1e-14);
    cplx d1 = discrete_det_semi_infinite(entry, 3, 1.0, 1e-12, 8);
    cplx d2 = discrete_det_semi_infinite(entry, 3, 1.0, 1e-12, 64);
    REQUIRE(std::abs(d1 - d2) < 1e-11);
    // empty index set
    REQUIRE(std::abs(discrete_det_finite(entry, 2, 1, 0.7) - 1.0) < 1e-15);
}

TEST_CASE("discrete laguerre kernel: symmetry, diagonal range, s->0 limit") {
    DiscreteLaguerreKernel k(0.5, 0.8, 4);
    for (int a = 0; a <= 4; ++a) {
        REQUIRE(k(a, a) >= 0.0);
        REQUIRE(k(a, a) <= 1.0);
        for (int b = 0; b <= 4; ++b) REQUIRE(k(a, b) == Catch::Approx(k(b, a)).margin(1e-14));
    }
    DiscreteLaguerreKernel tiny(0.5, 1e-7, 2);
    for (int a = 0; a <= 2; ++a) REQUIRE(tiny(a, a) == Catch::Approx(1.0).margin(1e-5));
}

TEST_CASE("bessel kernel diagonal equals the off-diagonal limit") {
    ContinuousKernel k = bessel_kernel(2.0);
    double x = 1.3;
    REQUIRE(k.off(x, x + 1e-7) == Catch::Approx(k.diag(x)).epsilon(1e-5));
}
