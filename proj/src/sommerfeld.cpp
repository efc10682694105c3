#include "halfplane/sommerfeld.hpp"

#include <cmath>

#include "halfplane/errors.hpp"

namespace halfplane {

namespace {

constexpr double kRayOffset = 1e-9;

// int_0^a e^{i s^2} ds, odd in a.
cplx fresnel_E(double a) {
    double x = std::abs(a);
    cplx val;
    if (x <= 6.0) {
        QuadratureSpec spec;
        spec.rel_tol = 1e-13;
        spec.abs_tol = 1e-15;
        std::vector<double> bp;
        for (double s = 0.5; s < x; s += 0.5) bp.push_back(s);
        val = integrate([](double s) { return std::exp(iu * s * s); }, 0.0, x, spec, bp)
                  .value;
    } else {
        // int_x^inf e^{i s^2} ds = (i e^{i x^2} / (2x)) sum_m (2m-1)!!/(2 i x^2)^m
        cplx q = 1.0 / (2.0 * iu * x * x);
        cplx term = 1.0, sum = 1.0;
        double prev = 1.0;
        for (int m = 1; m < 60; ++m) {
            term *= static_cast<double>(2 * m - 1) * q;
            if (std::abs(term) >= prev) break;  // asymptotic series turned
            sum += term;
            prev = std::abs(term);
            if (prev < 1e-18) break;
        }
        cplx J = iu * std::exp(iu * x * x) / (2.0 * x) * sum;
        val = std::sqrt(pi) / 2.0 * std::exp(iu * pi / 4.0) - J;
    }
    return a >= 0.0 ? val : -val;
}

}  // namespace

cplx fresnel_F(double a) {
    return 0.5 + std::exp(-iu * pi / 4.0) / std::sqrt(pi) * fresnel_E(a);
}

cplx amplitude_incident(const ScenarioConfig& sc, const FieldPoint& p) {
    return std::exp(-iu * sc.omega0 * p.rho * std::cos(p.phi - sc.alpha));
}

cplx amplitude_incident0(const ScenarioConfig& sc, const FieldPoint& p) {
    return p.phi <= sc.phi_plus ? amplitude_incident(sc, p) : 0.0;
}

cplx amplitude_incident1(const ScenarioConfig& sc, const FieldPoint& p) {
    return amplitude_incident(sc, p) - amplitude_incident0(sc, p);
}

cplx amplitude_reflected(const ScenarioConfig& sc, const FieldPoint& p) {
    if (p.phi >= sc.phi_minus) return 0.0;
    return -std::exp(-iu * sc.omega0 * p.rho * std::cos(p.phi + sc.alpha));
}

cplx amplitude_diffracted(const ScenarioConfig& sc, const FieldPoint& p,
                          const QuadratureSpec& spec) {
    if (!(p.rho > 0.0)) throw DomainError("amplitude_diffracted requires rho > 0");
    cplx integral = integrate_stationary_kernel(sc, p.rho, p.phi, sc.omega0, spec);
    return (iu / (8.0 * pi)) * integral;
}

namespace {

cplx amplitude_total_kernel(const ScenarioConfig& sc, const FieldPoint& p,
                            const QuadratureSpec& spec) {
    if (p.rho == 0.0) {
        // at the edge all three pieces are finite: incident + reflected cancel
        // and the kernel integral is evaluated with a zero phase
        cplx ad = (iu / (8.0 * pi)) *
                  integrate_stationary_kernel(sc, 1e-300, p.phi, sc.omega0, spec);
        return amplitude_incident0(sc, p) + amplitude_reflected(sc, p) + ad;
    }
    auto off = [&](const FieldPoint& q) {
        return amplitude_incident0(sc, q) + amplitude_reflected(sc, q) +
               amplitude_diffracted(sc, q, spec);
    };
    if (p.phi == sc.phi_plus || p.phi == sc.phi_minus) {
        FieldPoint lo{p.rho, p.phi - kRayOffset};
        FieldPoint hi{p.rho, p.phi + kRayOffset};
        return 0.5 * (off(lo) + off(hi));
    }
    return off(p);
}

cplx amplitude_total_fresnel(const ScenarioConfig& sc, const FieldPoint& p) {
    double w = sc.omega0;
    double s = std::sqrt(2.0 * w * p.rho);
    cplx t1 = std::exp(-iu * w * p.rho * std::cos(p.phi - sc.alpha)) *
              fresnel_F(s * std::cos((p.phi - sc.alpha) / 2.0));
    cplx t2 = std::exp(-iu * w * p.rho * std::cos(p.phi + sc.alpha)) *
              fresnel_F(s * std::cos((p.phi + sc.alpha) / 2.0));
    return t1 - t2;
}

}  // namespace

cplx amplitude_total(const ScenarioConfig& sc, const FieldPoint& p,
                     AmplitudeRoute route, const QuadratureSpec& spec) {
    switch (route) {
        case AmplitudeRoute::kernel:
            return amplitude_total_kernel(sc, p, spec);
        case AmplitudeRoute::fresnel:
            return amplitude_total_fresnel(sc, p);
    }
    throw UsageError("unknown amplitude route");
}

cplx amplitude_scattered(const ScenarioConfig& sc, const FieldPoint& p,
                         const QuadratureSpec& spec, AmplitudeRoute route) {
    return amplitude_total(sc, p, route, spec) - amplitude_incident(sc, p);
}

}  // namespace halfplane
