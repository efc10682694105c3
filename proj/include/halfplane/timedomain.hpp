#pragma once

#include <vector>

#include "halfplane/quadrature.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

enum class Component {
    incident,
    incident0,
    incident1,
    reflected,
    diffracted,
    total,
    scattered,
    scattered0,
};

const char* component_name(Component c);

struct FieldSample {
    FieldPoint point;
    double time;
    cplx value;
    Component component;
};

// Plane wave e^{-i omega0 (t - n.x)} f(t - n.x).
cplx incident(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
              double t);

// Incident wave truncated by the opaque screen: equal to the incident wave on
// the lit side 0 <= phi < phi_plus, zero in the shadow phi_plus < phi <= 2pi.
// Evaluation exactly on the shadow boundary raises JumpLineError.
cplx incident0(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t);

// incident1 = incident - incident0 (zero on the lit side, the full incident
// wave in the shadow).
cplx incident1(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t);

// Mirror wave -e^{-i omega0 (t - nbar.x)} f(t - nbar.x) inside phi < phi_minus.
cplx reflected(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t);

// Edge wave (i/8pi) int_R calZ(beta,phi) F(t - rho cosh beta) dbeta; exactly
// zero for t < rho.  Raises JumpLineError on the rays phi_pm, where the
// component genuinely jumps.
cplx diffracted(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
                double t, const QuadratureSpec& spec);

// Assembled fields.  These accept phi = phi_pm and return the average of the
// one-sided limits there (the sums are continuous across the rays).
cplx total(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
           double t, const QuadratureSpec& spec);
cplx scattered(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t, const QuadratureSpec& spec);
cplx scattered0(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
                double t, const QuadratureSpec& spec);

std::vector<FieldSample> evaluate_components(const ScenarioConfig& sc,
                                             const Profile& profile,
                                             const FieldPoint& p, double t,
                                             const QuadratureSpec& spec,
                                             const std::vector<Component>& which);

// |(d_tt - Laplace) total| by second-order central differences in (t, x1, x2)
// at a Cartesian point; GeometryError if the stencil touches the screen.
double dalembert_residual(const ScenarioConfig& sc, const Profile& profile, double x1,
                          double x2, double t, double h, const QuadratureSpec& spec);

}  // namespace halfplane
