#pragma once

#include "halfplane/complex_math.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

// Diffraction kernels.  Building blocks:
//   U(zeta)        = coth(q(zeta - i pi/2 + i alpha)) - coth(q(zeta - i pi/2 - i alpha)),  q = 1/4
//   Z(z)           = -U(z - i pi/2) + U(z - 5 i pi/2)
//   calZ(beta,phi) = Z(beta + 2 pi i - i phi)
// For real beta all poles of calZ(., phi) sit on the imaginary axis; the two
// that can reach the integration interval are beta = -i eps_pm with
// eps_pm = phi_pm - phi.

// Raw evaluation distance below which a pole-proximity error is raised.
inline constexpr double kPoleRadius = 1e-12;

cplx eval_U(cplx zeta, double alpha);
cplx eval_Z(cplx z, double alpha);
cplx eval_calZ(cplx beta, double phi, const ScenarioConfig& sc);
// d/dphi of calZ, analytic form.
cplx eval_dphi_calZ(cplx beta, double phi, const ScenarioConfig& sc);

// Singular split  calZ = -4/(beta + i eps_+) + 4/(beta + i eps_-) + Zcheck,
// with Zcheck smooth and bounded on [-1,1] x [0,2pi] (eps_pm = 0 allowed here;
// only the explicit singular fractions carry the poles).
struct KernelDecomposition {
    double eps_plus;
    double eps_minus;
    cplx singular_coeff_plus{-4.0, 0.0};
    cplx singular_coeff_minus{+4.0, 0.0};

    cplx singular_part(cplx beta) const;
    cplx remainder(cplx beta) const;       // Zcheck(beta, phi)
    cplx remainder_dphi(cplx beta) const;  // Zcheck_1: dphi calZ minus its singular part
    cplx reconstruct(cplx beta) const { return singular_part(beta) + remainder(beta); }

    double phi;
    double alpha;
    double sum_plus;   // phi_plus + phi (argument of one smooth coth factor)
    double sum_minus;  // phi_minus + phi
};

KernelDecomposition decompose_calZ(double phi, const ScenarioConfig& sc);

// Stationary Sommerfeld kernel
//   zeta(gamma,phi) = (1 - e^{i(-gamma+phi-alpha)/2})^{-1} - (1 - e^{i(-gamma+phi+alpha)/2})^{-1}
// with poles at gamma = phi -+ alpha (mod 4pi).
cplx eval_sommerfeld_kernel(cplx gamma, double phi, double alpha);

}  // namespace halfplane
