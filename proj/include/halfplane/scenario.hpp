#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "halfplane/complex_math.hpp"

namespace halfplane {

// Geometry and carrier of one diffraction run.  The screen occupies
// {x2 = 0, x1 > 0}; angles live in [0, 2pi] with both faces phi = 0 and
// phi = 2pi on the screen.  Immutable after construction.
struct ScenarioConfig {
    double alpha;       // incidence angle, pi/2 < alpha < pi
    double omega0;      // carrier frequency, > 0
    double phi_plus;    // shadow boundary, pi + alpha
    double phi_minus;   // reflection boundary, pi - alpha
    std::array<double, 2> n;      // incidence direction (cos(pi+alpha), sin(pi+alpha))
    std::array<double, 2> n_bar;  // mirrored direction (n1, -n2)
};

ScenarioConfig make_scenario(double alpha, double omega0);

struct FieldPoint {
    double rho;  // >= 0
    double phi;  // in [0, 2pi]
};

FieldPoint make_point(double rho, double phi);

// n.x and n_bar.x for a polar point.
double n_dot_x(const ScenarioConfig& sc, const FieldPoint& p);
double nbar_dot_x(const ScenarioConfig& sc, const FieldPoint& p);

// Causal profile f: f(s) = 0 for s < 0, f(s) -> 1 as s -> +infinity.
// Shipped kinds: heaviside step, smooth ramp 1 - exp(-lambda s), and a
// sampled table with linear interpolation (held constant past the last node).
class Profile {
public:
    enum class Kind { heaviside, smooth_ramp, sampled };

    static Profile heaviside();
    static Profile smooth_ramp(double lambda);
    static Profile sampled(std::vector<double> s, std::vector<cplx> values);

    Kind kind() const { return kind_; }
    double lambda() const { return lambda_; }

    cplx f(double s) const;
    // F(s) = f(s) exp(-i omega0 s)
    cplx modulated(double s, double omega0) const;

    bool has_closed_form_transform() const { return kind_ != Kind::sampled; }
    // Closed-form Fourier-Laplace transform, Im(omega) > 0 required.
    cplx fhat_closed_form(cplx omega) const;

    // Decay exponent p for the (1+|s|)^p bound; informational.
    double decay_exponent() const;
    // Horizon S1 with |f(s) - 1| < 0.01 for s > S1.
    double settle_horizon() const;
    // Last tabulated abscissa (sampled profiles), else +infinity semantics via 0.
    double table_extent() const;

    std::string describe() const;

private:
    Profile() = default;
    Kind kind_ = Kind::heaviside;
    double lambda_ = 0.0;
    std::shared_ptr<const std::vector<double>> s_;
    std::shared_ptr<const std::vector<cplx>> v_;
};

// Fourier-Laplace transform of the profile per the defining half-line integral
// int_0^inf e^{i omega t} f(t) dt, Im(omega) > 0.  Returns the analytic value
// for closed-form profiles; otherwise integrates the table with an analytic
// constant-continuation tail.  T_max bounds the quadrature window; the
// truncation tail estimate must come in under tol.
cplx fourier_laplace(const Profile& profile, cplx omega, double T_max, double tol);

// Always-numeric variant (oracle path; also used for sampled profiles).
cplx fourier_laplace_quadrature(const Profile& profile, cplx omega, double T_max,
                                double tol);

// Numeric Fourier-Laplace transform of an arbitrary causal signal sampled by a
// callable, with breakpoints where the integrand is known to kink.
cplx fourier_laplace_of(const std::function<cplx(double)>& h, cplx omega,
                        double T_max, double tol,
                        const std::vector<double>& kinks = {});

}  // namespace halfplane
