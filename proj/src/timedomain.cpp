#include "halfplane/timedomain.hpp"

#include <cmath>
#include <sstream>

#include "halfplane/errors.hpp"

namespace halfplane {

namespace {

constexpr double kJumpOffset = 1e-9;  // one-sided averaging offset at phi_pm

bool on_ray(double phi, double ray) { return phi == ray; }

void require_off_ray(double phi, const ScenarioConfig& sc, const char* who) {
    if (on_ray(phi, sc.phi_plus) || on_ray(phi, sc.phi_minus)) {
        std::ostringstream os;
        os << who << ": component evaluation exactly on the jump ray phi = "
           << (on_ray(phi, sc.phi_plus) ? "phi_plus" : "phi_minus")
           << " is direction-dependent; evaluate the assembled field instead";
        throw JumpLineError(os.str());
    }
}

}  // namespace

const char* component_name(Component c) {
    switch (c) {
        case Component::incident: return "incident";
        case Component::incident0: return "incident0";
        case Component::incident1: return "incident1";
        case Component::reflected: return "reflected";
        case Component::diffracted: return "diffracted";
        case Component::total: return "total";
        case Component::scattered: return "scattered";
        case Component::scattered0: return "scattered0";
    }
    return "?";
}

cplx incident(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
              double t) {
    double s = t - n_dot_x(sc, p);
    if (s < 0.0) return 0.0;
    return std::exp(-iu * sc.omega0 * s) * profile.f(s);
}

cplx incident0(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t) {
    require_off_ray(p.phi, sc, "incident0");
    return p.phi < sc.phi_plus ? incident(sc, profile, p, t) : 0.0;
}

cplx incident1(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t) {
    require_off_ray(p.phi, sc, "incident1");
    return p.phi < sc.phi_plus ? 0.0 : incident(sc, profile, p, t);
}

cplx reflected(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t) {
    if (on_ray(p.phi, sc.phi_minus)) {
        throw JumpLineError(
            "reflected: evaluation exactly on phi_minus is direction-dependent");
    }
    if (p.phi > sc.phi_minus) return 0.0;
    double s = t - nbar_dot_x(sc, p);
    if (s < 0.0) return 0.0;
    return -std::exp(-iu * sc.omega0 * s) * profile.f(s);
}

cplx diffracted(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
                double t, const QuadratureSpec& spec) {
    if (!(p.rho > 0.0)) throw DomainError("diffracted field requires rho > 0");
    require_off_ray(p.phi, sc, "diffracted");
    if (t < p.rho) return 0.0;
    cplx integral = integrate_timedomain_kernel(sc, profile, p.rho, p.phi, t, spec);
    return (iu / (8.0 * pi)) * integral;
}

namespace {

cplx total_off_ray(const ScenarioConfig& sc, const Profile& profile,
                   const FieldPoint& p, double t, const QuadratureSpec& spec) {
    cplx u = incident0(sc, profile, p, t) + reflected(sc, profile, p, t);
    if (p.rho > 0.0 && t >= p.rho) u += diffracted(sc, profile, p, t, spec);
    return u;
}

}  // namespace

cplx total(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
           double t, const QuadratureSpec& spec) {
    if (on_ray(p.phi, sc.phi_plus) || on_ray(p.phi, sc.phi_minus)) {
        FieldPoint lo{p.rho, p.phi - kJumpOffset};
        FieldPoint hi{p.rho, p.phi + kJumpOffset};
        return 0.5 * (total_off_ray(sc, profile, lo, t, spec) +
                      total_off_ray(sc, profile, hi, t, spec));
    }
    return total_off_ray(sc, profile, p, t, spec);
}

cplx scattered(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
               double t, const QuadratureSpec& spec) {
    return total(sc, profile, p, t, spec) - incident(sc, profile, p, t);
}

cplx scattered0(const ScenarioConfig& sc, const Profile& profile, const FieldPoint& p,
                double t, const QuadratureSpec& spec) {
    if (on_ray(p.phi, sc.phi_plus) || on_ray(p.phi, sc.phi_minus)) {
        FieldPoint lo{p.rho, p.phi - kJumpOffset};
        FieldPoint hi{p.rho, p.phi + kJumpOffset};
        return 0.5 * (scattered0(sc, profile, lo, t, spec) +
                      scattered0(sc, profile, hi, t, spec));
    }
    return total(sc, profile, p, t, spec) - incident0(sc, profile, p, t);
}

std::vector<FieldSample> evaluate_components(const ScenarioConfig& sc,
                                             const Profile& profile,
                                             const FieldPoint& p, double t,
                                             const QuadratureSpec& spec,
                                             const std::vector<Component>& which) {
    std::vector<FieldSample> out;
    out.reserve(which.size());
    for (Component c : which) {
        cplx v;
        switch (c) {
            case Component::incident: v = incident(sc, profile, p, t); break;
            case Component::incident0: v = incident0(sc, profile, p, t); break;
            case Component::incident1: v = incident1(sc, profile, p, t); break;
            case Component::reflected: v = reflected(sc, profile, p, t); break;
            case Component::diffracted: v = diffracted(sc, profile, p, t, spec); break;
            case Component::total: v = total(sc, profile, p, t, spec); break;
            case Component::scattered: v = scattered(sc, profile, p, t, spec); break;
            case Component::scattered0: v = scattered0(sc, profile, p, t, spec); break;
        }
        out.push_back(FieldSample{p, t, v, c});
    }
    return out;
}

double dalembert_residual(const ScenarioConfig& sc, const Profile& profile, double x1,
                          double x2, double t, double h, const QuadratureSpec& spec) {
    if (x1 > 0.0 && std::abs(x2) <= h) {
        throw GeometryError("d'Alembert stencil touches the screen");
    }
    auto u = [&](double a, double b, double tau) {
        double rho = std::hypot(a, b);
        double phi = std::atan2(b, a);
        if (phi < 0.0) phi += 2.0 * pi;
        return total(sc, profile, FieldPoint{rho, phi}, tau, spec);
    };
    cplx u0 = u(x1, x2, t);
    cplx utt = (u(x1, x2, t + h) - 2.0 * u0 + u(x1, x2, t - h)) / (h * h);
    cplx uxx = (u(x1 + h, x2, t) - 2.0 * u0 + u(x1 - h, x2, t)) / (h * h);
    cplx uyy = (u(x1, x2 + h, t) - 2.0 * u0 + u(x1, x2 - h, t)) / (h * h);
    return std::abs(utt - uxx - uyy);
}

}  // namespace halfplane
