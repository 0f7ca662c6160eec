#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace advlin {

using Scalar = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

inline bool is_finite(Scalar z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal branch square root, sqrt(r e^{it}) = sqrt(r) e^{it/2}.
inline Scalar csqrt(Scalar z) { return std::sqrt(z); }

// Principal branch cube root.
inline Scalar ccbrt(Scalar z) {
    double r = std::abs(z);
    if (r == 0.0) return {0.0, 0.0};
    double t = std::arg(z);
    return std::polar(std::cbrt(r), t / 3.0);
}

// e^{2*pi*i*j/n}
inline Scalar root_of_unity(long j, long n) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(n));
}

}  // namespace advlin
