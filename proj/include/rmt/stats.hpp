#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/specfun.hpp"

namespace rmt {

enum class stat_kind { two_sample_counts_chi2, ks_on_ordered_statistic, moment_z_test };

struct StatTest {
    stat_kind kind;
    std::string label;
    double statistic = 0.0;
    double p_value = 1.0;
};

// Two-sample chi-square on integer count histograms; bins are pooled from
// the tails until every pooled expected count is >= 5 in both samples.
inline StatTest chi2_two_sample_counts(const std::vector<long>& a, const std::vector<long>& b,
                                       const std::string& label) {
    std::size_t len = std::max(a.size(), b.size());
    std::vector<double> oa(len, 0.0), ob(len, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) oa[i] = double(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) ob[i] = double(b[i]);
    // pool sparse tail bins
    std::vector<double> pa, pb;
    double ca = 0.0, cb = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        ca += oa[i];
        cb += ob[i];
        if (ca + cb >= 10.0 && std::min(ca, cb) >= 5.0) {
            pa.push_back(ca);
            pb.push_back(cb);
            ca = cb = 0.0;
        }
    }
    if (ca + cb > 0.0) {
        if (pa.empty()) {
            pa.push_back(ca);
            pb.push_back(cb);
        } else {
            pa.back() += ca;
            pb.back() += cb;
        }
    }
    StatTest t{stat_kind::two_sample_counts_chi2, label, 0.0, 1.0};
    if (pa.size() < 2) return t;  // degenerate; nothing to compare
    double na = 0.0, nb = 0.0;
    for (double v : pa) na += v;
    for (double v : pb) nb += v;
    double ra = std::sqrt(nb / na), rb = std::sqrt(na / nb);
    double chi2 = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        double d = ra * pa[i] - rb * pb[i];
        chi2 += d * d / (pa[i] + pb[i]);
    }
    t.statistic = chi2;
    t.p_value = chi2_sf(chi2, double(pa.size() - 1));
    return t;
}

// Two-sample Kolmogorov-Smirnov on a continuous scalar statistic.
inline StatTest ks_two_sample(std::vector<double> a, std::vector<double> b,
                              const std::string& label) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        double fa = double(i) / a.size(), fb = double(j) / b.size();
        d = std::max(d, std::abs(fa - fb));
    }
    double ne = double(a.size()) * double(b.size()) / double(a.size() + b.size());
    double sq = std::sqrt(ne);
    double lam = (sq + 0.12 + 0.11 / sq) * d;
    StatTest t{stat_kind::ks_on_ordered_statistic, label, d, kolmogorov_q(lam)};
    return t;
}

// z-test on the difference of sample means of a scalar statistic.
inline StatTest z_test_means(const std::vector<double>& a, const std::vector<double>& b,
                             const std::string& label) {
    auto moments = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= double(v.size());
        double s2 = 0.0;
        for (double x : v) s2 += (x - m) * (x - m);
        s2 /= double(v.size() - 1);
        return std::pair<double, double>{m, s2};
    };
    auto [ma, va] = moments(a);
    auto [mb, vb] = moments(b);
    double se = std::sqrt(va / a.size() + vb / b.size());
    double z = se > 0.0 ? (ma - mb) / se : 0.0;
    StatTest t{stat_kind::moment_z_test, label, z, 2.0 * normal_cdf(-std::abs(z))};
    return t;
}

struct BatteryResult {
    std::vector<StatTest> tests;
    double alpha = 1e-3;
    bool pass = true;
    double min_adjusted_p = 1.0;  // min over tests of p * n_tests (capped at 1)
    void finalize() {
        pass = true;
        min_adjusted_p = 1.0;
        for (const auto& t : tests) {
            double adj = std::min(1.0, t.p_value * double(tests.size()));
            min_adjusted_p = std::min(min_adjusted_p, adj);
            if (adj < alpha) pass = false;
        }
    }
};

} // namespace rmt
