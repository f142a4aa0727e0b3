#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rmt/common.hpp"

namespace rmt {

// An ordered point configuration: eigenvalues on the real line or
// eigen-angles in (-pi, pi]. Values are kept strictly descending; labels
// x_1 > x_2 > ... are implicit in the ordering.
class Spectrum {
  public:
    Spectrum() = default;
    Spectrum(std::vector<double> values, bool circular) : v_(std::move(values)), circular_(circular) {
        std::sort(v_.begin(), v_.end(), std::greater<double>());
        check();
    }

    static Spectrum from_sorted(std::vector<double> values, bool circular) {
        Spectrum s;
        s.v_ = std::move(values);
        s.circular_ = circular;
        s.check();
        return s;
    }

    const std::vector<double>& values() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool circular() const { return circular_; }
    double operator[](std::size_t i) const { return v_[i]; }
    bool empty() const { return v_.empty(); }

    // number of points in the open interval (a, b)
    int count_in(double a, double b) const {
        int c = 0;
        for (double x : v_)
            if (x > a && x < b) ++c;
        return c;
    }

  private:
    void check() const {
        for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
            if (!(v_[i] > v_[i + 1]) || v_[i] - v_[i + 1] < 1e-12)
                throw numeric_error("Spectrum: values not strictly descending (tie below 1e-12)");
        }
        if (circular_) {
            for (double x : v_)
                if (!(x > -pi && x <= pi)) throw numeric_error("Spectrum: angle outside (-pi, pi]");
        }
    }

    std::vector<double> v_;
    bool circular_ = false;
};

} // namespace rmt
