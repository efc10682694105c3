#include "halfplane/frequency.hpp"

#include <cmath>
#include <sstream>

#include "halfplane/errors.hpp"

namespace halfplane {

namespace {

constexpr double kRayOffset = 1e-9;

void require_upper(cplx omega, const char* who) {
    if (!(omega.imag() > 0.0)) {
        std::ostringstream os;
        os << who << ": Im(omega) must be > 0";
        throw DomainError(os.str());
    }
}

cplx ghat(const ScenarioConfig& sc, const Profile& profile, cplx omega) {
    // transform of the profile shifted onto the carrier
    cplx shifted = omega - sc.omega0;
    if (profile.has_closed_form_transform()) return profile.fhat_closed_form(shifted);
    double T = 50.0 / shifted.imag();
    return fourier_laplace_quadrature(profile, shifted, T, 1e-10);
}

bool on_ray(double phi, double ray) { return phi == ray; }

}  // namespace

cplx hat_incident(const ScenarioConfig& sc, const Profile& profile,
                  const FieldPoint& p, cplx omega) {
    require_upper(omega, "hat_incident");
    return std::exp(iu * omega * n_dot_x(sc, p)) * ghat(sc, profile, omega);
}

cplx hat_incident0(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega) {
    require_upper(omega, "hat_incident0");
    if (on_ray(p.phi, sc.phi_plus))
        throw JumpLineError("hat_incident0: evaluation exactly on phi_plus");
    return p.phi < sc.phi_plus ? hat_incident(sc, profile, p, omega) : 0.0;
}

cplx hat_incident1(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega) {
    require_upper(omega, "hat_incident1");
    if (on_ray(p.phi, sc.phi_plus))
        throw JumpLineError("hat_incident1: evaluation exactly on phi_plus");
    return p.phi < sc.phi_plus ? 0.0 : hat_incident(sc, profile, p, omega);
}

cplx hat_reflected(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega) {
    require_upper(omega, "hat_reflected");
    if (on_ray(p.phi, sc.phi_minus))
        throw JumpLineError("hat_reflected: evaluation exactly on phi_minus");
    if (p.phi > sc.phi_minus) return 0.0;
    return -ghat(sc, profile, omega) *
           std::exp(-iu * omega * p.rho * std::cos(p.phi + sc.alpha));
}

cplx hat_diffracted(const ScenarioConfig& sc, const Profile& profile,
                    const FieldPoint& p, cplx omega, const QuadratureSpec& spec) {
    require_upper(omega, "hat_diffracted");
    if (!(p.rho > 0.0)) throw DomainError("hat_diffracted requires rho > 0");
    cplx integral = integrate_frequency_kernel(sc, p.rho, p.phi, omega, spec);
    return (iu / (8.0 * pi)) * ghat(sc, profile, omega) * integral;
}

namespace {

cplx hat_scattered_off_ray(const ScenarioConfig& sc, const Profile& profile,
                           const FieldPoint& p, cplx omega,
                           const QuadratureSpec& spec) {
    return hat_reflected(sc, profile, p, omega) +
           hat_diffracted(sc, profile, p, omega, spec) -
           hat_incident1(sc, profile, p, omega);
}

}  // namespace

cplx hat_scattered(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, cplx omega, const QuadratureSpec& spec) {
    require_upper(omega, "hat_scattered");
    if (on_ray(p.phi, sc.phi_plus) || on_ray(p.phi, sc.phi_minus)) {
        FieldPoint lo{p.rho, p.phi - kRayOffset};
        FieldPoint hi{p.rho, p.phi + kRayOffset};
        return 0.5 * (hat_scattered_off_ray(sc, profile, lo, omega, spec) +
                      hat_scattered_off_ray(sc, profile, hi, omega, spec));
    }
    return hat_scattered_off_ray(sc, profile, p, omega, spec);
}

cplx hat_total(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               cplx omega, const QuadratureSpec& spec) {
    require_upper(omega, "hat_total");
    auto off = [&](const FieldPoint& q) {
        return hat_incident0(sc, profile, q, omega) +
               hat_reflected(sc, profile, q, omega) +
               hat_diffracted(sc, profile, q, omega, spec);
    };
    if (on_ray(p.phi, sc.phi_plus) || on_ray(p.phi, sc.phi_minus)) {
        FieldPoint lo{p.rho, p.phi - kRayOffset};
        FieldPoint hi{p.rho, p.phi + kRayOffset};
        return 0.5 * (off(lo) + off(hi));
    }
    return off(p);
}

// --- analytic derivatives ---------------------------------------------------

cplx hat_reflected_drho(const ScenarioConfig& sc, const Profile& profile,
                        const FieldPoint& p, cplx omega) {
    cplx v = hat_reflected(sc, profile, p, omega);
    return v * (-iu * omega * std::cos(p.phi + sc.alpha));
}

cplx hat_reflected_dphi(const ScenarioConfig& sc, const Profile& profile,
                        const FieldPoint& p, cplx omega) {
    cplx v = hat_reflected(sc, profile, p, omega);
    return v * (iu * omega * p.rho * std::sin(p.phi + sc.alpha));
}

cplx hat_reflected_dphiphi(const ScenarioConfig& sc, const Profile& profile,
                           const FieldPoint& p, cplx omega) {
    cplx v = hat_reflected(sc, profile, p, omega);
    cplx a = iu * omega * p.rho;
    double c = std::cos(p.phi + sc.alpha), s = std::sin(p.phi + sc.alpha);
    return v * (a * c + a * s * a * s);
}

cplx hat_incident1_drho(const ScenarioConfig& sc, const Profile& profile,
                        const FieldPoint& p, cplx omega) {
    cplx v = hat_incident1(sc, profile, p, omega);
    return v * (-iu * omega * std::cos(p.phi - sc.alpha));
}

cplx hat_incident1_dphi(const ScenarioConfig& sc, const Profile& profile,
                        const FieldPoint& p, cplx omega) {
    cplx v = hat_incident1(sc, profile, p, omega);
    return v * (iu * omega * p.rho * std::sin(p.phi - sc.alpha));
}

cplx hat_incident1_dphiphi(const ScenarioConfig& sc, const Profile& profile,
                           const FieldPoint& p, cplx omega) {
    cplx v = hat_incident1(sc, profile, p, omega);
    cplx a = iu * omega * p.rho;
    double c = std::cos(p.phi - sc.alpha), s = std::sin(p.phi - sc.alpha);
    return v * (a * c + a * s * a * s);
}

cplx hat_diffracted_drho(const ScenarioConfig& sc, const Profile& profile,
                         const FieldPoint& p, cplx omega, const QuadratureSpec& spec) {
    cplx integral = integrate_frequency_kernel(sc, p.rho, p.phi, omega, spec,
                                               SingWeight::cosh_w);
    return (iu / (8.0 * pi)) * ghat(sc, profile, omega) * (iu * omega) * integral;
}

cplx hat_diffracted_dphi(const ScenarioConfig& sc, const Profile& profile,
                         const FieldPoint& p, cplx omega, const QuadratureSpec& spec) {
    cplx integral = integrate_frequency_kernel(sc, p.rho, p.phi, omega, spec,
                                               SingWeight::sinh_w);
    return (iu / (8.0 * pi)) * ghat(sc, profile, omega) * (-omega * p.rho) * integral;
}

cplx hat_diffracted_dphiphi(const ScenarioConfig& sc, const Profile& profile,
                            const FieldPoint& p, cplx omega,
                            const QuadratureSpec& spec) {
    cplx ic = integrate_frequency_kernel(sc, p.rho, p.phi, omega, spec,
                                         SingWeight::cosh_w);
    cplx is2 = integrate_frequency_kernel(sc, p.rho, p.phi, omega, spec,
                                          SingWeight::sinh_sq);
    cplx a = iu * omega * p.rho;
    return (iu / (8.0 * pi)) * ghat(sc, profile, omega) * (-a) * (ic + a * is2);
}

cplx hat_scattered_drho(const ScenarioConfig& sc, const Profile& profile,
                        const FieldPoint& p, cplx omega, const QuadratureSpec& spec) {
    return hat_reflected_drho(sc, profile, p, omega) +
           hat_diffracted_drho(sc, profile, p, omega, spec) -
           hat_incident1_drho(sc, profile, p, omega);
}

cplx hat_scattered_dphi(const ScenarioConfig& sc, const Profile& profile,
                        const FieldPoint& p, cplx omega, const QuadratureSpec& spec) {
    return hat_reflected_dphi(sc, profile, p, omega) +
           hat_diffracted_dphi(sc, profile, p, omega, spec) -
           hat_incident1_dphi(sc, profile, p, omega);
}

cplx hat_scattered_dphiphi(const ScenarioConfig& sc, const Profile& profile,
                           const FieldPoint& p, cplx omega,
                           const QuadratureSpec& spec) {
    return hat_reflected_dphiphi(sc, profile, p, omega) +
           hat_diffracted_dphiphi(sc, profile, p, omega, spec) -
           hat_incident1_dphiphi(sc, profile, p, omega);
}

FrequencyField make_frequency_field(const ScenarioConfig& sc, const Profile& profile,
                                    Component component, cplx omega,
                                    const QuadratureSpec& spec) {
    require_upper(omega, "make_frequency_field");
    FrequencyField f;
    f.omega = omega;
    f.component = component;
    switch (component) {
        case Component::incident:
            f.evaluator = [=](FieldPoint p) { return hat_incident(sc, profile, p, omega); };
            break;
        case Component::incident0:
            f.evaluator = [=](FieldPoint p) { return hat_incident0(sc, profile, p, omega); };
            break;
        case Component::incident1:
            f.evaluator = [=](FieldPoint p) { return hat_incident1(sc, profile, p, omega); };
            break;
        case Component::reflected:
            f.evaluator = [=](FieldPoint p) { return hat_reflected(sc, profile, p, omega); };
            break;
        case Component::diffracted:
            f.evaluator = [=](FieldPoint p) {
                return hat_diffracted(sc, profile, p, omega, spec);
            };
            break;
        case Component::total:
            f.evaluator = [=](FieldPoint p) { return hat_total(sc, profile, p, omega, spec); };
            break;
        case Component::scattered:
        case Component::scattered0:
            f.evaluator = [=](FieldPoint p) {
                return hat_scattered(sc, profile, p, omega, spec);
            };
            break;
    }
    return f;
}

// --- jumps -------------------------------------------------------------------

JumpEstimate jump_across(const std::function<cplx(double)>& field, double phi_star,
                         const std::vector<double>& deltas) {
    if (deltas.size() < 3)
        throw UsageError("jump extrapolation needs at least 3 deltas");
    for (size_t i = 0; i + 1 < deltas.size(); ++i) {
        if (!(deltas[i] > deltas[i + 1]) || !(deltas[i + 1] > 0.0))
            throw UsageError("deltas must be positive and decreasing");
        // the elimination weights below assume halving
        if (std::abs(deltas[i + 1] / deltas[i] - 0.5) > 0.01)
            throw UsageError("deltas must form a halving sequence");
    }

    JumpEstimate est;
    std::vector<cplx> T;
    for (double d : deltas) {
        T.push_back(field(phi_star + d) - field(phi_star - d));
        est.raw.push_back(T.back());
    }
    // two Richardson sweeps against the halving ratio: kills the delta and
    // delta^2 terms of the one-sided expansions
    std::vector<cplx> T1(T.size() - 1), T2;
    for (size_t k = 0; k + 1 < T.size(); ++k) T1[k] = 2.0 * T[k + 1] - T[k];
    T2.resize(T1.size() - 1);
    for (size_t k = 0; k + 1 < T1.size(); ++k)
        T2[k] = (4.0 * T1[k + 1] - T1[k]) / 3.0;
    est.jump = T2.back();
    est.error = T2.size() >= 2 ? std::abs(T2.back() - T2[T2.size() - 2])
                               : std::abs(T2.back() - T1.back());
    double scale = std::abs(est.jump) + 1.0;
    if (est.error > 0.2 * scale) {
        std::ostringstream os;
        os << "jump extrapolation did not settle (error " << est.error
           << "); raw one-sided differences:";
        for (const cplx& v : est.raw)
            os << " (" << v.real() << "," << v.imag() << ")";
        throw PrecisionError(os.str(), est.error);
    }
    return est;
}

JumpEstimate jump(const ScenarioConfig& sc, const Profile& profile, Component c,
                  int dphi_order, double rho, cplx omega, JumpRay at,
                  const std::vector<double>& deltas, const QuadratureSpec& spec) {
    double phi_star = at == JumpRay::phi_plus ? sc.phi_plus : sc.phi_minus;
    auto eval = [&](double phi) -> cplx {
        FieldPoint q{rho, phi};
        switch (c) {
            case Component::reflected:
                return dphi_order == 0   ? hat_reflected(sc, profile, q, omega)
                       : dphi_order == 1 ? hat_reflected_dphi(sc, profile, q, omega)
                                         : hat_reflected_dphiphi(sc, profile, q, omega);
            case Component::diffracted:
                return dphi_order == 0 ? hat_diffracted(sc, profile, q, omega, spec)
                       : dphi_order == 1
                           ? hat_diffracted_dphi(sc, profile, q, omega, spec)
                           : hat_diffracted_dphiphi(sc, profile, q, omega, spec);
            case Component::incident1:
                return dphi_order == 0   ? hat_incident1(sc, profile, q, omega)
                       : dphi_order == 1 ? hat_incident1_dphi(sc, profile, q, omega)
                                         : hat_incident1_dphiphi(sc, profile, q, omega);
            case Component::incident0:
                return dphi_order == 0 ? hat_incident0(sc, profile, q, omega)
                                       : throw UsageError("unsupported derivative");
            case Component::scattered:
                return dphi_order == 0 ? hat_scattered(sc, profile, q, omega, spec)
                       : dphi_order == 1
                           ? hat_scattered_dphi(sc, profile, q, omega, spec)
                           : hat_scattered_dphiphi(sc, profile, q, omega, spec);
            default:
                throw UsageError("jump: unsupported component");
        }
    };
    return jump_across(eval, phi_star, deltas);
}

// --- stencils and the Green identity ------------------------------------------

double helmholtz_residual(const std::function<cplx(FieldPoint)>& field,
                          const FieldPoint& p, cplx omega, double h) {
    if (!(h > 0.0)) throw DomainError("stencil spacing must be > 0");
    if (p.rho - h <= 0.0)
        throw GeometryError("radial stencil leaves the domain (rho - h <= 0)");
    if (p.phi - h <= 0.0 || p.phi + h >= 2.0 * pi)
        throw GeometryError("angular stencil crosses the screen");
    auto f = [&](double r, double ph) { return field(FieldPoint{r, ph}); };
    cplx f0 = f(p.rho, p.phi);
    cplx frr = (f(p.rho + h, p.phi) - 2.0 * f0 + f(p.rho - h, p.phi)) / (h * h);
    cplx fr = (f(p.rho + h, p.phi) - f(p.rho - h, p.phi)) / (2.0 * h);
    cplx fpp = (f(p.rho, p.phi + h) - 2.0 * f0 + f(p.rho, p.phi - h)) / (h * h);
    cplx lap = frr + fr / p.rho + fpp / (p.rho * p.rho);
    return std::abs(lap + omega * omega * f0);
}

GreenIdentityReport green_identity_check(
    const std::function<cplx(FieldPoint)>& w,
    const std::function<cplx(FieldPoint)>& dw_drho,
    const std::function<cplx(FieldPoint)>& dw_dphi, cplx omega, double R, int n_rho,
    int n_phi) {
    if (n_rho < 2 || n_phi < 2) throw ConfigError("green identity grid counts >= 2");
    const double rho_floor = 1e-9;
    // the clamped radius serves as the Jacobian too, so the rho = 0 row takes
    // the finite limit value of (|grad w|^2) rho instead of a spurious zero
    auto cell = [&](double rho, double phi) {
        FieldPoint q{std::max(rho, rho_floor), phi};
        double g2 = std::norm(dw_drho(q)) + std::norm(dw_dphi(q)) / (q.rho * q.rho);
        double w2 = std::norm(w(q));
        return std::array<double, 2>{g2 * q.rho, w2 * q.rho};
    };
    double hr = R / n_rho;
    double hp = 2.0 * pi / n_phi;
    double grad = 0.0, mass = 0.0;
    for (int i = 0; i <= n_rho; ++i) {
        double rho = i * hr;
        double wr = (i == 0 || i == n_rho) ? 0.5 : 1.0;
        double row_g = 0.0, row_m = 0.0;
        for (int j = 0; j <= n_phi; ++j) {
            double phi = j * hp;
            double wp = (j == 0 || j == n_phi) ? 0.5 : 1.0;
            auto v = cell(rho, phi);
            row_g += wp * v[0];
            row_m += wp * v[1];
        }
        grad += wr * row_g;
        mass += wr * row_m;
    }
    grad *= hr * hp;
    mass *= hr * hp;

    cplx boundary = 0.0;
    for (int j = 0; j <= n_phi; ++j) {
        double phi = j * hp;
        double wp = (j == 0 || j == n_phi) ? 0.5 : 1.0;
        FieldPoint q{R, phi};
        boundary += wp * dw_drho(q) * std::conj(w(q));
    }
    boundary *= hp * R;

    GreenIdentityReport rep;
    cplx w2 = omega * omega;
    rep.volume_gradient = grad - w2.real() * mass;
    rep.volume_mass = -w2.imag() * mass;
    rep.boundary = boundary;
    rep.mismatch = std::abs(rep.volume_gradient - boundary.real()) +
                   std::abs(rep.volume_mass - boundary.imag());
    rep.boundary_magnitude = std::abs(boundary);
    return rep;
}

cplx slit_mode(const FieldPoint& p, cplx omega) {
    double r = std::max(p.rho, 1e-300);
    return std::sin(omega * r) / std::sqrt(r) * std::sin(p.phi / 2.0);
}

cplx slit_mode_drho(const FieldPoint& p, cplx omega) {
    double r = std::max(p.rho, 1e-300);
    cplx s = std::sin(omega * r), c = std::cos(omega * r);
    return (omega * c / std::sqrt(r) - 0.5 * s / std::pow(r, 1.5)) *
           std::sin(p.phi / 2.0);
}

cplx slit_mode_dphi(const FieldPoint& p, cplx omega) {
    double r = std::max(p.rho, 1e-300);
    return 0.5 * std::sin(omega * r) / std::sqrt(r) * std::cos(p.phi / 2.0);
}

}  // namespace halfplane
