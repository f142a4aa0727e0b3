#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rmt/discrete.hpp"

using namespace rmt;

TEST_CASE("dlue genfn trivial values") {
    REQUIRE(std::abs(dlue_genfn(3, 0.5, 1.0, 0.0) - 1.0) < 1e-14);
    // s -> 0: K^d -> identity, det(I - xi I) -> 0 at xi = 1
    REQUIRE(std::abs(dlue_genfn(2, 0.0 + 1e-9, 1e-9, 1.0)) < 1e-5);
}

TEST_CASE("dlue equals the continuous laguerre gap determinant") {
    for (double alpha : {0.0, 1.5})
        for (double s : {0.7, 2.0})
            for (int n : {1, 3})
                for (double xi : {0.5, 1.0}) {
                    cplx lhs = genfn_ue(WeightSpec::laguerre_b2(alpha), n, s,
                                        std::numeric_limits<double>::infinity(), xi);
                    cplx rhs = dlue_genfn(n, alpha, s, xi);
                    REQUIRE(std::abs(lhs - rhs) < 1e-10);
                }
}

TEST_CASE("cue exp-cos average: s=0 and n=1 bessel value") {
    REQUIRE(cue_exp_cos_average(2, 0.0) == 1.0);
    for (double s : {0.6, 1.4})
        REQUIRE(cue_exp_cos_average(1, s) == Catch::Approx(bessel_i0(s)).epsilon(1e-9));
}

TEST_CASE("cue exp-cos average: quadrature and monte carlo agree") {
    double s = 1.0;
    int n = 2;
    double quad = cue_exp_cos_average(n, s);
    MCEstimate mc = mc_cue_exp_cos_average(n, s, 40000, 5150);
    REQUIRE(std::abs(mc.value - quad) < 4.0 * mc.se);
}

TEST_CASE("bo right-hand sides: trivial values") {
    double s = 0.9;
    REQUIRE(std::abs(bo_rhs_discrete(2, s, 0.0) - std::exp(0.25 * s * s)) < 1e-12);
    REQUIRE(std::abs(bo_rhs_continuous(2, s, 0.0) - std::exp(0.25 * s * s)) < 1e-12);
    REQUIRE(std::abs(bo_rhs_discrete(2, 1e-8, 1.0) - 1.0) < 1e-6);
}

TEST_CASE("toeplitz route: cue average equals discrete bessel determinant") {
    for (int n : {1, 2, 3})
        for (double s : {0.5, 1.2}) {
            double lhs = cue_exp_cos_average(n, s);
            cplx rhs = bo_rhs_discrete(n, s, 1.0);
            REQUIRE(std::abs(lhs - rhs.real()) < 1e-7);
        }
}

TEST_CASE("discrete equals continuous bessel determinant with xi") {
    for (int alpha : {1, 2})
        for (double s : {0.5, 1.5})
            for (double xi : {0.3, 1.0}) {
                cplx lhs = bo_rhs_discrete(alpha, s, xi);
                cplx rhs = bo_rhs_continuous(alpha, s, xi);
                REQUIRE(std::abs(lhs - rhs) < 1e-9);
            }
}

TEST_CASE("both bo sides decrease in xi") {
    int n = 2;
    double s = 1.0;
    double prev_d = 1e300, prev_c = 1e300;
    for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double d = bo_rhs_discrete(n, s, xi).real();
        double c = bo_rhs_continuous(n, s, xi).real();
        REQUIRE(d < prev_d);
        REQUIRE(c < prev_c);
        prev_d = d;
        prev_c = c;
    }
}
