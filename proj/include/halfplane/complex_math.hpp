#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace halfplane {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr cplx iu{0.0, 1.0};

// coth has period i*pi; shift Im(z) into (-pi/2, pi/2] so the only pole left
// to worry about is z = 0 and cosh/sinh stay well scaled.
inline cplx reduce_coth_argument(cplx z) {
    double k = std::round(z.imag() / pi);
    return {z.real(), z.imag() - k * pi};
}

inline cplx coth(cplx z);

// coth(z) - 1/z, analytic at 0.  Series for small |z|; otherwise coth(z)
// minus 1/z directly.  No argument reduction here: coth is i*pi periodic
// but 1/z is not, so the difference must be formed at the original z.
inline cplx coth_minus_inv(cplx z) {
    double a = std::abs(z);
    if (a < 0.5) {
        // coth z = 1/z + z/3 - z^3/45 + 2 z^5/945 - z^7/4725 + 2 z^9/93555 - ...
        cplx z2 = z * z;
        return z * (1.0 / 3.0 +
                    z2 * (-1.0 / 45.0 +
                          z2 * (2.0 / 945.0 +
                                z2 * (-1.0 / 4725.0 +
                                      z2 * (2.0 / 93555.0 +
                                            z2 * (-1382.0 / 638512875.0))))));
    }
    return coth(z) - 1.0 / z;
}

inline cplx coth(cplx z) {
    z = reduce_coth_argument(z);
    double a = std::abs(z);
    if (a < 0.5) return 1.0 / z + coth_minus_inv(z);
    double x = z.real();
    if (std::abs(x) > 18.0) {
        double s = x > 0 ? 1.0 : -1.0;
        cplx e = std::exp(-2.0 * s * z);
        return s * (1.0 + 2.0 * e / (1.0 - e));
    }
    return std::cosh(z) / std::sinh(z);
}

// Gudermannian function; gd'(x) = sech(x), gd(x) -> +-pi/2.
inline double gudermannian(double x) { return std::asin(std::tanh(x)); }

inline double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace halfplane
