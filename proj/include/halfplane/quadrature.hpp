#pragma once

#include <functional>
#include <vector>

#include "halfplane/kernel.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 20000;
    // Semicircle radius for the deformed unit-interval integrals; 0 picks
    // r = 2 eps0(omega) with eps0 from the smallness conditions on
    // cosh(beta) - 1 (see eps0_for).
    double deformation_radius = 0.0;
};

struct Integral {
    cplx value{0.0, 0.0};
    double error = 0.0;
    long evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (G7,K15) over [a,b]; breakpoints seed the
// initial partition (kinks, oscillation scale).  Throws PrecisionError when
// the tolerance cannot be met within max_subdivisions.
Integral integrate(const std::function<cplx(double)>& f, double a, double b,
                   const QuadratureSpec& spec,
                   const std::vector<double>& breakpoints = {});

// Largest eps0 such that for |beta| <= 2*eps0 both |cosh(beta)-1| < 1/4 and
// |Re omega| |cosh(beta)-1| <= Im(omega)/4 hold; found by bisection.
double eps0_for(cplx omega);

// Prefactors carried by the singular unit-interval integrals.
enum class SingWeight { unit, cosh_w, sinh_w, sinh_sq };

// int_{-1}^{1} w(beta) e^{i omega rho cosh beta} / (beta + i eps)^m dbeta,
// m in {0,1,2}.  For 0 < |eps| < eps0 the path is deformed through the lower
// semicircle gamma_r (r = 2 eps0) and the residue at beta = -i eps is added
// back exactly when eps > 0; eps = 0 returns the symmetric principal value.
// force_direct bypasses the deformation (property tests).
cplx singular_unit_integral(SingWeight w, int m, double rho, cplx omega, double eps,
                            const QuadratureSpec& spec, bool force_direct = false);

enum class KKind { K0, K1, K2 };

// The unit-interval model integrals: K0 = e^{i omega rho cosh beta}/(beta+i eps),
// K1 = cosh(beta) e^{i omega rho cosh beta} (no singular factor as defined),
// K2 = e^{i omega rho cosh beta}/(beta+i eps)^2.
cplx integrate_K(KKind kind, double rho, cplx omega, double eps,
                 const QuadratureSpec& spec, bool force_direct = false);

// Time-domain kernel integral int_R calZ(beta,phi) F(t - rho cosh beta) dbeta
// (no i/8pi prefactor).  Exactly zero for t < rho; otherwise restricted to
// |beta| <= arccosh(t/rho) and folded to [0, B].  Near phi ~ phi_pm the
// singular term is split off, its frozen-numerator part integrated in closed
// form, and the smooth remainder integrated adaptively.
cplx integrate_timedomain_kernel(const ScenarioConfig& sc, const Profile& profile,
                                 double rho, double phi, double t,
                                 const QuadratureSpec& spec);

// Frequency-domain kernel integral int_R w(beta) calZ(beta,phi)
// e^{i omega rho cosh beta} dbeta for Im omega > 0.  Real line truncated at
// |beta| <= B from the e^{-Im(omega) rho cosh beta} e^{-|beta|/2} decay; the
// unit interval goes through the singular split.
cplx integrate_frequency_kernel(const ScenarioConfig& sc, double rho, double phi,
                                cplx omega, const QuadratureSpec& spec,
                                SingWeight w = SingWeight::unit,
                                double truncation_override = 0.0);

// Stationary kernel integral int_R calZ(beta,phi) e^{i omega0 rho cosh beta}
// dbeta with real omega0 > 0, evaluated on the steepest-descent path
// beta = x + i gd(x) (no poles are crossed: every pole of calZ has Re beta=0
// and the path leaves the real axis only at the origin).  On that path the
// phase is constant and the integrand decays like e^{-omega0 rho sinh x tanh x}.
cplx integrate_stationary_kernel(const ScenarioConfig& sc, double rho, double phi,
                                 double omega0, const QuadratureSpec& spec);

// Reference evaluation of the same integral by truncated real-axis quadrature
// (only usable for small omega0*rho; validates the deformed path).
cplx integrate_stationary_kernel_realaxis(const ScenarioConfig& sc, double rho,
                                          double phi, double omega0,
                                          const QuadratureSpec& spec, double B);

// Truncation point for the frequency-domain tail: smallest B >= 1 with
// Im(omega) rho (cosh B - 1) >= budget + growth*B.
double frequency_truncation(double rho, cplx omega, double budget, double growth);

// Oscillation-aware breakpoints for integrands carrying e^{i c cosh beta}.
std::vector<double> phase_breakpoints(double a, double b, double osc_scale);

}  // namespace halfplane
