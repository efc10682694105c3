#include "halfplane/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "halfplane/errors.hpp"
#include "halfplane/quadrature.hpp"

namespace halfplane {

ScenarioConfig make_scenario(double alpha, double omega0) {
    if (!(alpha > pi / 2.0 && alpha < pi)) {
        std::ostringstream os;
        os << "alpha = " << alpha << " violates pi/2 < alpha < pi";
        throw ConfigError(os.str());
    }
    if (!(omega0 > 0.0)) {
        std::ostringstream os;
        os << "omega0 = " << omega0 << " violates omega0 > 0";
        throw ConfigError(os.str());
    }
    ScenarioConfig sc;
    sc.alpha = alpha;
    sc.omega0 = omega0;
    sc.phi_plus = pi + alpha;
    sc.phi_minus = pi - alpha;
    sc.n = {std::cos(pi + alpha), std::sin(pi + alpha)};
    sc.n_bar = {sc.n[0], -sc.n[1]};
    return sc;
}

FieldPoint make_point(double rho, double phi) {
    if (rho < 0.0) throw ConfigError("rho must be >= 0");
    if (phi < 0.0 || phi > 2.0 * pi) throw ConfigError("phi must lie in [0, 2pi]");
    return FieldPoint{rho, phi};
}

double n_dot_x(const ScenarioConfig& sc, const FieldPoint& p) {
    return p.rho * (sc.n[0] * std::cos(p.phi) + sc.n[1] * std::sin(p.phi));
}

double nbar_dot_x(const ScenarioConfig& sc, const FieldPoint& p) {
    return p.rho * (sc.n_bar[0] * std::cos(p.phi) + sc.n_bar[1] * std::sin(p.phi));
}

Profile Profile::heaviside() {
    Profile p;
    p.kind_ = Kind::heaviside;
    return p;
}

Profile Profile::smooth_ramp(double lambda) {
    if (!(lambda > 0.0)) throw ConfigError("smooth-ramp rate lambda must be > 0");
    Profile p;
    p.kind_ = Kind::smooth_ramp;
    p.lambda_ = lambda;
    return p;
}

Profile Profile::sampled(std::vector<double> s, std::vector<cplx> values) {
    if (s.size() != values.size() || s.size() < 2)
        throw ConfigError("sampled profile needs >= 2 matching (s, f) rows");
    if (!std::is_sorted(s.begin(), s.end()))
        throw ConfigError("sampled profile abscissae must be increasing");
    if (s.front() < 0.0)
        throw ConfigError("sampled profile abscissae must start at s >= 0");
    Profile p;
    p.kind_ = Kind::sampled;
    p.s_ = std::make_shared<const std::vector<double>>(std::move(s));
    p.v_ = std::make_shared<const std::vector<cplx>>(std::move(values));
    return p;
}

cplx Profile::f(double s) const {
    if (s < 0.0) return 0.0;
    switch (kind_) {
        case Kind::heaviside:
            return 1.0;
        case Kind::smooth_ramp:
            return 1.0 - std::exp(-lambda_ * s);
        case Kind::sampled: {
            const auto& xs = *s_;
            const auto& ys = *v_;
            if (s <= xs.front()) {
                // linear from the implicit zero at s = 0^- only if the table
                // starts past zero; otherwise clamp to the first node
                if (xs.front() == 0.0) return ys.front();
                double w = s / xs.front();
                return w * ys.front();
            }
            if (s >= xs.back()) return ys.back();
            auto it = std::upper_bound(xs.begin(), xs.end(), s);
            size_t i = static_cast<size_t>(it - xs.begin());
            double w = (s - xs[i - 1]) / (xs[i] - xs[i - 1]);
            return ys[i - 1] + w * (ys[i] - ys[i - 1]);
        }
    }
    return 0.0;
}

cplx Profile::modulated(double s, double omega0) const {
    if (s < 0.0) return 0.0;
    return f(s) * std::exp(-iu * omega0 * s);
}

cplx Profile::fhat_closed_form(cplx omega) const {
    if (omega.imag() <= 0.0)
        throw DomainError("fourier-laplace transform requires Im(omega) > 0");
    switch (kind_) {
        case Kind::heaviside:
            return iu / omega;
        case Kind::smooth_ramp:
            return iu / omega - iu / (omega + iu * lambda_);
        case Kind::sampled:
            throw DomainError("sampled profile has no closed-form transform");
    }
    return 0.0;
}

double Profile::decay_exponent() const { return 0.0; }

double Profile::settle_horizon() const {
    switch (kind_) {
        case Kind::heaviside:
            return 0.0;
        case Kind::smooth_ramp:
            return std::log(100.0) / lambda_;
        case Kind::sampled: {
            const auto& xs = *s_;
            const auto& ys = *v_;
            for (size_t i = xs.size(); i-- > 0;) {
                if (std::abs(ys[i] - 1.0) >= 0.01) {
                    return i + 1 < xs.size() ? xs[i + 1] : xs.back();
                }
            }
            return xs.front();
        }
    }
    return 0.0;
}

double Profile::table_extent() const {
    return kind_ == Kind::sampled ? s_->back() : 0.0;
}

std::string Profile::describe() const {
    switch (kind_) {
        case Kind::heaviside:
            return "heaviside";
        case Kind::smooth_ramp: {
            std::ostringstream os;
            os << "smooth-ramp(lambda=" << lambda_ << ")";
            return os.str();
        }
        case Kind::sampled: {
            std::ostringstream os;
            os << "sampled(" << s_->size() << " rows)";
            return os.str();
        }
    }
    return "?";
}

cplx fourier_laplace_of(const std::function<cplx(double)>& h, cplx omega,
                        double T_max, double tol,
                        const std::vector<double>& kinks) {
    if (omega.imag() <= 0.0)
        throw DomainError("fourier-laplace transform requires Im(omega) > 0");
    QuadratureSpec spec;
    spec.rel_tol = std::min(1e-10, tol);
    spec.abs_tol = std::min(1e-13, tol * 1e-2);
    std::vector<double> bp;
    for (double k : kinks)
        if (k > 0.0 && k < T_max) bp.push_back(k);
    // one breakpoint every few oscillation periods of e^{i Re(omega) t}
    double period = 2.0 * pi / (std::abs(omega.real()) + 1e-30);
    double step = std::min(8.0 * period, T_max / 8.0);
    for (double t = step; t < T_max; t += step) bp.push_back(t);
    auto g = [&](double t) { return std::exp(iu * omega * t) * h(t); };
    return integrate(g, 0.0, T_max, spec, bp).value;
}

cplx fourier_laplace_quadrature(const Profile& profile, cplx omega, double T_max,
                                double tol) {
    if (omega.imag() <= 0.0)
        throw DomainError("fourier-laplace transform requires Im(omega) > 0");
    double w2 = omega.imag();
    double tail = std::exp(-w2 * T_max) / w2;  // |f| ~ 1 beyond the window
    if (profile.kind() == Profile::Kind::sampled && profile.table_extent() < T_max) {
        // table must cover the requested window; constant continuation past it
        // is handled analytically below, so only warn through the tail bound
    }
    if (tail > tol) {
        std::ostringstream os;
        os << "tail bound " << tail << " at T_max = " << T_max << " exceeds tol " << tol;
        throw PrecisionError(os.str(), tail);
    }
    QuadratureSpec spec;
    spec.rel_tol = std::min(1e-11, tol);
    spec.abs_tol = std::min(1e-14, tol * 1e-3);
    std::vector<double> bp;
    if (profile.kind() == Profile::Kind::sampled) {
        double ext = std::min(profile.table_extent(), T_max);
        for (double t = 0; t <= ext; t += std::max(ext / 64.0, 1e-6)) bp.push_back(t);
    }
    double period = 2.0 * pi / (std::abs(omega.real()) + 1e-30);
    double step = std::min(8.0 * period, T_max / 8.0);
    for (double t = step; t < T_max; t += step) bp.push_back(t);
    auto g = [&](double t) { return std::exp(iu * omega * t) * profile.f(t); };
    cplx head = integrate(g, 0.0, T_max, spec, bp).value;
    // analytic tail with f held at f(T_max): int_T^inf e^{i w t} c dt = -c e^{iwT}/(iw)
    cplx tail_val = -profile.f(T_max) * std::exp(iu * omega * T_max) / (iu * omega);
    return head + tail_val;
}

cplx fourier_laplace(const Profile& profile, cplx omega, double T_max, double tol) {
    if (omega.imag() <= 0.0)
        throw DomainError("fourier-laplace transform requires Im(omega) > 0");
    if (profile.has_closed_form_transform()) return profile.fhat_closed_form(omega);
    return fourier_laplace_quadrature(profile, omega, T_max, tol);
}

}  // namespace halfplane
