#pragma once

#include "halfplane/quadrature.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

// Stationary (limiting-amplitude) fields of the half-plane problem.

// F(a) = e^{-i pi/4} pi^{-1/2} int_{-inf}^{a} e^{i s^2} ds; F(-inf)=0, F(0)=1/2,
// F(+inf)=1.  Adaptive quadrature for |a| <= 6, asymptotic series beyond.
cplx fresnel_F(double a);

enum class AmplitudeRoute { kernel, fresnel };

// Limiting amplitude of the free incident wave, e^{i omega0 n.x}.
cplx amplitude_incident(const ScenarioConfig& sc, const FieldPoint& p);
// Truncated incident amplitude: e^{-i omega0 rho cos(phi-alpha)} on [0, phi_plus].
cplx amplitude_incident0(const ScenarioConfig& sc, const FieldPoint& p);
cplx amplitude_incident1(const ScenarioConfig& sc, const FieldPoint& p);
// Reflected amplitude -e^{-i omega0 rho cos(phi+alpha)} on (0, phi_minus).
cplx amplitude_reflected(const ScenarioConfig& sc, const FieldPoint& p);
// Edge-diffracted amplitude (i/8pi) int_R calZ e^{i omega0 rho cosh beta} dbeta.
cplx amplitude_diffracted(const ScenarioConfig& sc, const FieldPoint& p,
                          const QuadratureSpec& spec);
// Full stationary amplitude, by component assembly (kernel) or through the
// independent Fresnel-integral closed form (fresnel).
cplx amplitude_total(const ScenarioConfig& sc, const FieldPoint& p,
                     AmplitudeRoute route, const QuadratureSpec& spec);
cplx amplitude_scattered(const ScenarioConfig& sc, const FieldPoint& p,
                         const QuadratureSpec& spec,
                         AmplitudeRoute route = AmplitudeRoute::kernel);

}  // namespace halfplane
