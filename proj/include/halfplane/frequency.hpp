#pragma once

#include <functional>
#include <vector>

#include "halfplane/quadrature.hpp"
#include "halfplane/scenario.hpp"
#include "halfplane/timedomain.hpp"

namespace halfplane {

// Fourier-Laplace images of the time-domain family, Im(omega) > 0 throughout.

cplx hat_incident(const ScenarioConfig& sc, const Profile& profile,
                  const FieldPoint& p, cplx omega);
cplx hat_incident0(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega);
// hat of incident - incident0: zero on the lit side, fhat(omega-omega0) e^{i omega n.x}
// in the shadow.
cplx hat_incident1(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega);
cplx hat_reflected(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega);
cplx hat_diffracted(const ScenarioConfig& sc, const Profile& profile,
                    const FieldPoint& p, cplx omega, const QuadratureSpec& spec);
// hat_scattered = hat_reflected + hat_diffracted - hat_incident1; C^2 across the
// rays, where the one-sided averages are returned.
cplx hat_scattered(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega, const QuadratureSpec& spec);
cplx hat_total(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               cplx omega, const QuadratureSpec& spec);

// Analytic polar derivatives (differentiated integrands, not finite differences).
cplx hat_reflected_drho(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx);
cplx hat_reflected_dphi(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx);
cplx hat_reflected_dphiphi(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx);
cplx hat_incident1_drho(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx);
cplx hat_incident1_dphi(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx);
cplx hat_incident1_dphiphi(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx);
cplx hat_diffracted_drho(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx,
                         const QuadratureSpec&);
cplx hat_diffracted_dphi(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx,
                         const QuadratureSpec&);
cplx hat_diffracted_dphiphi(const ScenarioConfig&, const Profile&, const FieldPoint&,
                            cplx, const QuadratureSpec&);
cplx hat_scattered_drho(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx,
                        const QuadratureSpec&);
cplx hat_scattered_dphi(const ScenarioConfig&, const Profile&, const FieldPoint&, cplx,
                        const QuadratureSpec&);
cplx hat_scattered_dphiphi(const ScenarioConfig&, const Profile&, const FieldPoint&,
                           cplx, const QuadratureSpec&);

// A frequency-domain field at one omega in the upper half-plane, bundled with
// its pointwise evaluator.
struct FrequencyField {
    cplx omega;
    Component component;
    std::function<cplx(FieldPoint)> evaluator;
    cplx operator()(const FieldPoint& p) const { return evaluator(p); }
};

FrequencyField make_frequency_field(const ScenarioConfig& sc, const Profile& profile,
                                    Component component, cplx omega,
                                    const QuadratureSpec& spec);

enum class JumpRay { phi_plus, phi_minus };

struct JumpEstimate {
    cplx jump;
    double error;
    std::vector<cplx> raw;  // one-sided differences per delta
};

// Richardson-extrapolated jump of phi -> field(phi) across phi_star; deltas
// must be positive decreasing (a halving sequence extrapolates best).
JumpEstimate jump_across(const std::function<cplx(double)>& field, double phi_star,
                         const std::vector<double>& deltas);

// Convenience: jump of a named frequency component (or its phi-derivatives)
// at one of the rays.
JumpEstimate jump(const ScenarioConfig& sc, const Profile& profile, Component c,
                  int dphi_order, double rho, cplx omega, JumpRay at,
                  const std::vector<double>& deltas, const QuadratureSpec& spec);

// |Laplace_h(field) + omega^2 field| with the 5-point polar stencil
// d_rr + (1/rho) d_r + (1/rho^2) d_pp at spacing h (radial) and h (angular).
double helmholtz_residual(const std::function<cplx(FieldPoint)>& field,
                          const FieldPoint& p, cplx omega, double h);

struct GreenIdentityReport {
    double volume_gradient;   // int_QR |grad w|^2 - Re(omega^2) |w|^2
    double volume_mass;       // -Im(omega^2) int_QR |w|^2
    cplx boundary;            // int_{rho=R} (d_rho w) conj(w) R dphi
    double mismatch;          // |lhs - rhs| over both identities
    double boundary_magnitude;
};

// First Green identity on the slit disk Q_R for a field with zero screen data
// supplied with its analytic polar gradient; n_rho x n_phi trapezoid grid.
GreenIdentityReport green_identity_check(
    const std::function<cplx(FieldPoint)>& w,
    const std::function<cplx(FieldPoint)>& dw_drho,
    const std::function<cplx(FieldPoint)>& dw_dphi, cplx omega, double R, int n_rho,
    int n_phi);

// Exact Helmholtz mode on the slit plane vanishing on both screen faces:
// rho^{-1/2} sin(omega rho) sin(phi/2), plus its polar gradient.
cplx slit_mode(const FieldPoint& p, cplx omega);
cplx slit_mode_drho(const FieldPoint& p, cplx omega);
cplx slit_mode_dphi(const FieldPoint& p, cplx omega);

}  // namespace halfplane
