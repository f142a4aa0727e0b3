#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "rmt/ensembles.hpp"
#include "rmt/gap.hpp"
#include "rmt/orthopoly.hpp"
#include "rmt/pointops.hpp"
#include "rmt/stats.hpp"

using namespace rmt;

namespace {

// z-score of an empirical mean against a target
double zscore(double sum, double sumsq, long m, double target) {
    double mean = sum / m;
    double var = sumsq / m - mean * mean;
    return (mean - target) / std::sqrt(var / m);
}

} // namespace

TEST_CASE("circular normalization") {
    REQUIRE(circular_normalization(1, 0.37) == Catch::Approx(two_pi).epsilon(1e-13));
    REQUIRE(circular_normalization(2, 2.0) == Catch::Approx(8.0 * pi * pi).epsilon(1e-13));
    REQUIRE_THROWS(circular_normalization(2, 0.0));
}

TEST_CASE("circular normalization matches ordered quadrature at n=2 beta=1") {
    // integral of the density numerator over the ordered sector = Z / 2!
    const QuadRule& base = gauss_legendre(80);
    double tot = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        double t1 = -pi + (pi + pi) * 0.5 * (base.x[i] + 1.0);
        double w1 = pi * base.w[i];
        double c = 0.5 * (t1 + pi), mmid = 0.5 * (t1 - pi);
        for (std::size_t j = 0; j < base.size(); ++j) {
            double t2 = mmid + c * base.x[j];
            double w2 = c * base.w[j];
            tot += w1 * w2 * std::abs(2.0 * std::sin(0.5 * (t1 - t2)));
        }
    }
    REQUIRE(tot == Catch::Approx(circular_normalization(2, 1.0) / 2.0).epsilon(1e-10));
}

TEST_CASE("samplers are deterministic in the seed") {
    rng_t g1(11), g2(11);
    REQUIRE(sample_circular(1, 4, g1).values() == sample_circular(1, 4, g2).values());
    REQUIRE(sample_gue(5, g1).values() == sample_gue(5, g2).values());
}

TEST_CASE("cue n=1 angle is uniform") {
    rng_t g(21);
    long m = 20000;
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        Spectrum sp = sample_circular(2, 1, g);
        REQUIRE(sp.size() == 1);
        double t = sp[0];
        REQUIRE(t > -pi);
        REQUIRE(t <= pi);
        s += t;
        s2 += t * t;
    }
    // mean 0, second moment pi^2/3
    REQUIRE(std::abs(zscore(s, s2, m, 0.0)) < 4.0);
    double m2 = s2 / m;
    REQUIRE(std::abs(m2 - pi * pi / 3.0) < 4.0 * (pi * pi / std::sqrt(double(m))));
}

TEST_CASE("rotation invariance: equal arcs get equal mean counts") {
    rng_t g(33);
    long m = 8000;
    for (int beta : {1, 2, 4}) {
        double c1 = 0, c2 = 0;
        for (long i = 0; i < m; ++i) {
            Spectrum s = sample_circular(beta, 4, g);
            c1 += s.count_in(0.1, 1.1);
            c2 += s.count_in(-2.9, -1.9);
        }
        double diff = (c1 - c2) / m;
        // each count has variance <= n; 4 standard errors of the difference
        REQUIRE(std::abs(diff) < 4.0 * std::sqrt(2.0 * 4.0 / double(m)));
    }
}

TEST_CASE("gue eigenvalue density matches the cd kernel diagonal") {
    rng_t g(5);
    long m = 30000;
    int n = 4;
    CDKernel k(WeightSpec::gaussian_b2(), n);
    double lo = -0.8, hi = 0.4;
    double expect = integrate_adaptive([&](double x) { return k.diag(x); }, lo, hi, 1e-11);
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        double c = sample_gue(n, g).count_in(lo, hi);
        s += c;
        s2 += c * c;
    }
    REQUIRE(std::abs(zscore(s, s2, m, expect)) < 4.0);
}

TEST_CASE("gue n=1 law is e^{-x^2}/sqrt(pi)") {
    // second moment 1/2, Var(x^2) = 1/2
    rng_t g(7);
    long m = 40000;
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        double x = sample_gue(1, g)[0];
        s += x;
        s2 += x * x;
    }
    REQUIRE(std::abs(zscore(s, s2, m, 0.0)) < 4.0);
    REQUIRE(std::abs(s2 / m - 0.5) < 4.0 * std::sqrt(0.5 / double(m)));
}

TEST_CASE("lue n=1 alpha=0 is a standard exponential") {
    rng_t g(9);
    long m = 30000;
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        double x = sample_lue(1, 0, g)[0];
        REQUIRE(x > 0.0);
        s += x;
        s2 += x * x;
    }
    REQUIRE(std::abs(zscore(s, s2, m, 1.0)) < 4.0);
}

TEST_CASE("goe matches metropolis oracle at beta=1 gaussian weight") {
    // count in (-1,1) for GOE_3 (w1 = e^{-x^2/2}) from matrix model vs chain
    long m = 12000;
    rng_t g(13);
    MCConfig cfg{101, 1, -1, -1, 0.0};
    MetropolisSampler chain(1.0, WeightSpec::gaussian_b1(), 3, cfg);
    double sa = 0, sa2 = 0, sb = 0, sb2 = 0;
    for (long i = 0; i < m; ++i) {
        double a = sample_goe(3, g).count_in(-1.0, 1.0);
        double bcount = chain.next().count_in(-1.0, 1.0);
        sa += a;
        sa2 += a * a;
        sb += bcount;
        sb2 += bcount * bcount;
    }
    double za = sa / m, zb = sb / m;
    double se = std::sqrt((sa2 / m - za * za) / m + (sb2 / m - zb * zb) / m);
    REQUIRE(std::abs(za - zb) < 4.0 * se);
    REQUIRE_FALSE(chain.tuning_warning());
}

TEST_CASE("gse matches metropolis at beta=4") {
    long m = 8000;
    rng_t g(17);
    // GSE weight is e^{-2x^2}
    MCConfig cfg{103, 1, -1, -1, 0.0};
    MetropolisSampler chain(4.0, [](double x) { return -2.0 * x * x; }, -30.0, 30.0, false, 2,
                            cfg);
    double sa = 0, sa2 = 0, sb = 0, sb2 = 0;
    for (long i = 0; i < m; ++i) {
        Spectrum s1 = sample_gse(2, g);
        Spectrum s2 = chain.next();
        double a = s1[0] - s1[1];  // spacing statistic
        double b = s2[0] - s2[1];
        sa += a;
        sa2 += a * a;
        sb += b;
        sb2 += b * b;
    }
    double za = sa / m, zb = sb / m;
    double se = std::sqrt((sa2 / m - za * za) / m + (sb2 / m - zb * zb) / m);
    REQUIRE(std::abs(za - zb) < 4.0 * se);
}

TEST_CASE("coe spacing agrees with beta=1 circular metropolis") {
    long m = 10000;
    rng_t g(29);
    MCConfig cfg{105, 1, -1, -1, 0.0};
    MetropolisSampler chain(1.0, WeightSpec::circular_flag(), 4, cfg);
    std::vector<double> a, b;
    for (long i = 0; i < m; ++i) {
        Spectrum s1 = sample_circular(1, 4, g);
        Spectrum s2 = chain.next();
        a.push_back(s1[0] - s1[1]);
        b.push_back(s2[0] - s2[1]);
    }
    StatTest t = ks_two_sample(a, b, "spacing");
    REQUIRE(t.p_value > 1e-3);
}

TEST_CASE("metropolis determinism and beta=2 gaussian n=1 law") {
    MCConfig cfg{42, 1, 2000, 5, 0.8};
    MetropolisSampler c1(2.0, WeightSpec::gaussian_b2(), 1, cfg);
    MetropolisSampler c2(2.0, WeightSpec::gaussian_b2(), 1, cfg);
    for (int i = 0; i < 5; ++i) REQUIRE(c1.next().values() == c2.next().values());
    // N(0, 1/2): fresh chain, long run
    MCConfig cfg2{43, 1, -1, -1, 0.0};
    MetropolisSampler c3(2.0, WeightSpec::gaussian_b2(), 1, cfg2);
    long m = 20000;
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        double x = c3.next()[0];
        s += x;
        s2 += x * x;
    }
    REQUIRE(std::abs(s / m) < 0.03);
    REQUIRE(std::abs(s2 / m - 0.5) < 0.04);
}

TEST_CASE("orthogonal group sampler: angle counts and ranges") {
    rng_t g(51);
    for (auto [n, sign, expect] : {std::tuple{2, -1, 0}, {4, 1, 2}, {5, 1, 2}, {5, -1, 2},
                                   {6, -1, 2}}) {
        for (int rep = 0; rep < 50; ++rep) {
            Spectrum s = sample_orthogonal_group(n, sign, g);
            REQUIRE(int(s.size()) == expect);
            for (double t : s.values()) {
                REQUIRE(t > 0.0);
                REQUIRE(t < pi);
            }
        }
    }
}

TEST_CASE("o+(2n) angle density matches the jacobi kernel density") {
    // x = cos(theta): density of angles = K_N(x,x) sin(theta), jacobi a=b=-1/2
    rng_t g(53);
    int n = 6, nfree = 3;
    CDKernel k(WeightSpec::jacobi_b2(-0.5, -0.5), nfree);
    double lo = 0.8, hi = 1.8;
    double expect = integrate_adaptive(
        [&](double t) { return k.diag(std::cos(t)) * std::sin(t); }, lo, hi, 1e-11);
    long m = 20000;
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        double c = sample_orthogonal_group(n, 1, g).count_in(lo, hi);
        s += c;
        s2 += c * c;
    }
    REQUIRE(std::abs(zscore(s, s2, m, expect)) < 4.0);
}

TEST_CASE("bordered gue: even sub-spectrum is the embedded gue and interlaces") {
    rng_t g(61);
    int n = 3;
    long m = 15000;
    CDKernel k(WeightSpec::gaussian_b2(), n);
    double lo = -0.9, hi = 0.2;
    double expect = integrate_adaptive([&](double x) { return k.diag(x); }, lo, hi, 1e-11);
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        Spectrum sp = sample_bordered_gue(n, 0.8, g);
        REQUIRE(sp.size() == std::size_t(2 * n + 1));
        double c = decimate(sp, decimation::even).count_in(lo, hi);
        s += c;
        s2 += c * c;
    }
    REQUIRE(std::abs(zscore(s, s2, m, expect)) < 4.0);
}

TEST_CASE("rank-one wishart pair interlaces and even labels are the a's") {
    rng_t g(67);
    for (int rep = 0; rep < 200; ++rep) {
        auto [a, b] = sample_rank_one_wishart_pair(5, 3, 1.3, g);
        REQUIRE(a.size() == 3);
        REQUIRE(b.size() == 3);
        for (int i = 0; i < 3; ++i) {
            REQUIRE(b[i] > a[i]);
            if (i + 1 < 3) REQUIRE(a[i] > b[i + 1]);
        }
    }
}

TEST_CASE("scaled ginibre: mean count and radial second moment") {
    rng_t g(71);
    int n = 24;
    long m = 2000;
    double s = 0, s2 = 0;
    for (long i = 0; i < m; ++i) {
        auto z = sample_ginibre_scaled(n, g);
        REQUIRE(int(z.size()) == n);
        double per = 0.0;
        for (auto& v : z) per += std::norm(v);
        per /= n;
        s += per;
        s2 += per * per;
    }
    // finite-n mean of |z|^2 is (n+1)/(2n); the circular-law limit is 1/2
    double mean = s / double(m);
    double se = std::sqrt((s2 / m - mean * mean) / double(m));
    REQUIRE(std::abs(mean - (n + 1.0) / (2.0 * n)) < 4.0 * se);
    REQUIRE(std::abs(mean - 0.5) < 0.05);
}

TEST_CASE("antisymmetric gaussian positive spectrum sizes") {
    rng_t g(73);
    REQUIRE(sample_antisymmetric_gauss(6, g).size() == 3);
    REQUIRE(sample_antisymmetric_gauss(7, g).size() == 3);
}

TEST_CASE("cauchy ue stereographic sampler stays heavy-tailed (beta=2 n=2)") {
    // median of |x| for the (1+x^2)^{-2} single-point marginal is checked
    // against the metropolis oracle instead of closed forms
    long m = 10000;
    rng_t g(79);
    MCConfig cfg{107, 1, -1, -1, 0.0};
    MetropolisSampler chain(2.0, WeightSpec::cauchy_b2(0.0, 2), 2, cfg);
    std::vector<double> a, b;
    for (long i = 0; i < m; ++i) {
        a.push_back(sample_cauchy_ue(2, g)[0]);
        b.push_back(chain.next()[0]);
    }
    StatTest t = ks_two_sample(a, b, "largest");
    REQUIRE(t.p_value > 1e-3);
}

TEST_CASE("sample_hermitian dispatch") {
    rng_t g(83);
    EnsembleSpec spec{2.0, 3, WeightSpec::gaussian_b2()};
    REQUIRE(sample_hermitian(spec, g).size() == 3);
    EnsembleSpec bad{2.0, 3, WeightSpec::laguerre_b2(0.25)};
    REQUIRE_THROWS(sample_hermitian(bad, g));
}
