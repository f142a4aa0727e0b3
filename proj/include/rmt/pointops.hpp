#pragma once

#include <stdexcept>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/rng.hpp"
#include "rmt/spectrum.hpp"

namespace rmt {

// Superposition: merge of two independent point processes of the same
// support type. Constituent labels are discarded; the result is relabelled
// by descending sort.
inline Spectrum superpose(const Spectrum& s1, const Spectrum& s2) {
    if (s1.circular() != s2.circular())
        throw std::invalid_argument("superpose: mixed support types");
    std::vector<double> v;
    v.reserve(s1.size() + s2.size());
    v.insert(v.end(), s1.values().begin(), s1.values().end());
    v.insert(v.end(), s2.values().begin(), s2.values().end());
    return Spectrum(std::move(v), s1.circular());
}

enum class decimation { even, odd };

// Keep labels congruent to `offset` mod r (offset 0 means multiples of r).
// Labels count from 1 at the largest value.
inline Spectrum decimate_every(const Spectrum& s, int r, int offset) {
    if (r < 1 || r > static_cast<int>(s.size()))
        throw std::invalid_argument("decimate_every: need 1 <= r <= |s|");
    if (offset < 0 || offset >= r) throw std::invalid_argument("decimate_every: bad offset");
    std::vector<double> keep;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int label = static_cast<int>(i) + 1;
        if (label % r == offset % r) keep.push_back(s[i]);
    }
    return Spectrum::from_sorted(std::move(keep), s.circular());
}

inline Spectrum decimate(const Spectrum& s, decimation mode) {
    return decimate_every(s, 2, mode == decimation::even ? 0 : 1);
}

// even with probability 1/2, odd with probability 1/2
inline Spectrum decimate_alt(const Spectrum& s, rng_t& g) {
    bool even = std::uniform_real_distribution<double>(0.0, 1.0)(g) < 0.5;
    return decimate(s, even ? decimation::even : decimation::odd);
}

// every r-th with uniformly random offset
inline Spectrum decimate_alt_r(const Spectrum& s, int r, rng_t& g) {
    int offset = std::uniform_int_distribution<int>(0, r - 1)(g);
    return decimate_every(s, r, offset);
}

// Absolute values / singular values. For circular input this is the point
// process on the half circle (0, pi): angles in (0, pi) together with the
// negatives of the angles in (-pi, 0).
inline Spectrum abs_values(const Spectrum& s) {
    std::vector<double> v;
    v.reserve(s.size());
    for (double x : s.values()) {
        if (x == 0.0) throw numeric_error("abs_values: exact zero value");
        v.push_back(std::abs(x));
    }
    return Spectrum(std::move(v), s.circular());
}

// Raise circular eigenvalues to the p-th power: angles p*theta mod 2pi.
inline Spectrum power_angles(const Spectrum& s, int p) {
    if (!s.circular()) throw std::invalid_argument("power_angles: circular spectrum required");
    if (p < 1) throw std::invalid_argument("power_angles: p >= 1");
    std::vector<double> v;
    v.reserve(s.size());
    for (double t : s.values()) v.push_back(wrap_angle(p * t));
    return Spectrum(std::move(v), true);
}

} // namespace rmt
