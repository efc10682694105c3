#pragma once

#include <vector>

#include "halfplane/quadrature.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

// Limiting-amplitude convergence study: e^{i omega0 t} u(rho,phi,t) against the
// stationary amplitude, per component and assembled.
struct LapReport {
    FieldPoint point;
    std::vector<double> times;
    std::vector<double> errors_total;      // |e^{i w0 t} u - A|
    std::vector<double> errors_scattered;  // |e^{i w0 t} u_s - A_s|
    std::vector<double> errors_incident0;
    std::vector<double> errors_reflected;
    std::vector<double> errors_diffracted;
    double fitted_rate = 0.0;  // log-log slope of errors_total past the cushion
    double cushion = 0.0;      // 2 rho + profile settle horizon
    cplx amplitude_total_ref;
    cplx amplitude_scattered_ref;
};

// times must be increasing and > point.rho; phi must stay off the rays phi_pm
// (the limit statement excludes them).
LapReport lap_study(const ScenarioConfig& sc, const Profile& profile,
                    const FieldPoint& point, const std::vector<double>& times,
                    const QuadratureSpec& spec);

}  // namespace halfplane
