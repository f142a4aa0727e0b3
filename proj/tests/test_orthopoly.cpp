#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"

using namespace rmt;

namespace {

// quadrature oracle for <p_j, p_k> over the weight
double inner(const OPBasis& basis, int j, int k) {
    const WeightSpec& w = basis.weight();
    int K = std::max(j, k) + 1;
    std::vector<double> p(K);
    auto f = [&](double x) {
        basis.orthonormal(x, K, p.data());
        return p[j] * p[k] * w.evaluate(x);
    };
    switch (w.family()) {
        case weight_family::gaussian_beta2: {
            QuadRule q = map_to_interval(gauss_legendre(400), -10.0, 10.0);
            return integrate_rule(q, f);
        }
        case weight_family::laguerre_beta2: {
            // substitute x = u^2 so half-integer endpoint powers become smooth
            QuadRule q = map_to_half_line(gauss_legendre(600), 0.0);
            return integrate_rule(q, [&](double u) { return 2.0 * u * f(u * u); });
        }
        default: {
            // absorb the jacobi weight into the rule so endpoint powers are exact
            QuadRule q = gauss_jacobi(200, w.b(), w.a());
            double s = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                basis.orthonormal(q.x[i], K, p.data());
                s += q.w[i] * p[j] * p[k];
            }
            return s;
        }
    }
}

} // namespace

TEST_CASE("hermite-type recurrence is symmetric") {
    OPBasis b(WeightSpec::gaussian_b2(), 12);
    for (int k = 0; k <= 12; ++k) REQUIRE(b.rec_a(k) == 0.0);
    REQUIRE(b.rec_b(3) == Catch::Approx(1.5));
}

TEST_CASE("laguerre alpha=0 zeroth norm is 1") {
    OPBasis b(WeightSpec::laguerre_b2(0.0), 8);
    REQUIRE(std::exp(b.log_norm(0)) == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("orthonormality under quadrature") {
    for (auto w : {WeightSpec::gaussian_b2(), WeightSpec::laguerre_b2(0.5),
                   WeightSpec::jacobi_b2(0.25, 0.75)}) {
        OPBasis b(w, 13);
        for (int j = 0; j <= 12; j += 3)
            for (int k = j; k <= 12; k += 4) {
                double v = inner(b, j, k);
                if (j == k)
                    REQUIRE(v == Catch::Approx(1.0).margin(1e-10));
                else
                    REQUIRE(v == Catch::Approx(0.0).margin(1e-10));
            }
    }
}

TEST_CASE("gue cd kernel diagonal at n=1 is the normalized weight") {
    CDKernel k(WeightSpec::gaussian_b2(), 1);
    for (double x : {0.0, 0.7, -1.3})
        REQUIRE(k.diag(x) == Catch::Approx(std::exp(-x * x) / std::sqrt(pi)).epsilon(1e-12));
}

TEST_CASE("cd kernel integrates to n over support") {
    for (int n : {1, 3, 6}) {
        CDKernel k(WeightSpec::gaussian_b2(), n);
        QuadRule q = map_to_interval(gauss_legendre(500), -9.0, 9.0);
        double tr = integrate_rule(q, [&](double x) { return k.diag(x); });
        REQUIRE(tr == Catch::Approx(double(n)).epsilon(1e-11));
    }
    CDKernel kl(WeightSpec::laguerre_b2(1.5), 4);
    QuadRule q = map_to_half_line(gauss_legendre(800), 0.0);
    double tr = integrate_rule(q, [&](double x) { return kl.diag(x); });
    REQUIRE(tr == Catch::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("cd kernel reproducing property") {
    CDKernel k(WeightSpec::gaussian_b2(), 4);
    QuadRule q = map_to_interval(gauss_legendre(420), -9.0, 9.0);
    for (auto [x, y] : {std::pair{0.3, -0.8}, std::pair{1.1, 1.1}}) {
        double conv = integrate_rule(q, [&](double z) { return k(x, z) * k(z, y); });
        REQUIRE(conv == Catch::Approx(k(x, y)).margin(1e-8));
    }
}

TEST_CASE("cd kernel near-diagonal continuity") {
    CDKernel k(WeightSpec::laguerre_b2(0.5), 3);
    double x = 1.7;
    REQUIRE(k(x, x + 1e-10) == Catch::Approx(k.diag(x)).epsilon(1e-6));
    REQUIRE(k(x, x + 1e-5) == Catch::Approx(k.diag(x)).epsilon(1e-6));
}
