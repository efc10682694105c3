#pragma once

// Test-only reference evaluations, kept independent of the library's
// implementation paths: plain long-double cosh/sinh for the kernels (no
// argument reduction, no series switch) and composite trapezoid sums for the
// integrals (no adaptivity, no singular splits).

#include <complex>
#include <functional>

#include "halfplane/complex_math.hpp"

namespace oracle {

using cplxl = std::complex<long double>;

inline cplxl coth_ref(cplxl z) { return std::cosh(z) / std::sinh(z); }

inline cplxl U_ref(cplxl zeta, long double alpha) {
    const long double q = 0.25L;
    const cplxl i(0.0L, 1.0L);
    const long double pil = 3.14159265358979323846264338327950288L;
    return coth_ref(q * (zeta - i * (pil / 2.0L) + i * alpha)) -
           coth_ref(q * (zeta - i * (pil / 2.0L) - i * alpha));
}

inline cplxl Z_ref(cplxl z, long double alpha) {
    const cplxl i(0.0L, 1.0L);
    const long double pil = 3.14159265358979323846264338327950288L;
    return -U_ref(z - i * (pil / 2.0L), alpha) + U_ref(z - 5.0L * i * (pil / 2.0L), alpha);
}

inline cplxl calZ_ref(cplxl beta, long double phi, long double alpha) {
    const cplxl i(0.0L, 1.0L);
    const long double pil = 3.14159265358979323846264338327950288L;
    return Z_ref(beta + 2.0L * pil * i - i * phi, alpha);
}

// Composite trapezoid over [a,b] with n panels.
inline halfplane::cplx trapezoid(const std::function<halfplane::cplx(double)>& f,
                                 double a, double b, int n) {
    halfplane::cplx sum = 0.5 * (f(a) + f(b));
    double h = (b - a) / n;
    for (int k = 1; k < n; ++k) sum += f(a + k * h);
    return sum * h;
}

}  // namespace oracle
