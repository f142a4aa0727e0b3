#pragma once

#include <cstdint>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rmt {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double t) {
    t = std::fmod(t, two_pi);
    if (t <= -pi) t += two_pi;
    if (t > pi) t -= two_pi;
    return t;
}

inline double sinc_pi(double t) {
    // sin(pi t) / (pi t)
    double u = pi * t;
    if (std::abs(u) < 1e-4) {
        double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

// splitmix64, used to derive independent sub-seeds from (master seed, tag).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Deterministic per-task seed from a master seed and a textual tag.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t st = master ^ fnv1a64(tag);
    std::uint64_t a = splitmix64(st);
    std::uint64_t b = splitmix64(st);
    return a ^ (b << 1);
}

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rmt
