#include "halfplane/lap.hpp"

#include <algorithm>
#include <cmath>

#include "halfplane/errors.hpp"
#include "halfplane/sommerfeld.hpp"
#include "halfplane/timedomain.hpp"

namespace halfplane {

LapReport lap_study(const ScenarioConfig& sc, const Profile& profile,
                    const FieldPoint& point, const std::vector<double>& times,
                    const QuadratureSpec& spec) {
    if (point.phi == sc.phi_plus || point.phi == sc.phi_minus)
        throw DomainError("lap_study: the limit excludes the rays (phi != phi_pm)");
    if (times.empty() || !std::is_sorted(times.begin(), times.end()))
        throw ConfigError("lap_study: times must be increasing");
    if (times.front() <= point.rho)
        throw ConfigError("lap_study: times must exceed point.rho");

    LapReport rep;
    rep.point = point;
    rep.times = times;
    rep.cushion = 2.0 * point.rho + profile.settle_horizon();

    cplx A = amplitude_total(sc, point, AmplitudeRoute::kernel, spec);
    cplx As = amplitude_scattered(sc, point, spec);
    cplx Ai0 = amplitude_incident0(sc, point);
    cplx Ar = amplitude_reflected(sc, point);
    cplx Ad = amplitude_diffracted(sc, point, spec);
    rep.amplitude_total_ref = A;
    rep.amplitude_scattered_ref = As;

    for (double t : times) {
        cplx rot = std::exp(iu * sc.omega0 * t);
        rep.errors_total.push_back(
            std::abs(rot * total(sc, profile, point, t, spec) - A));
        rep.errors_scattered.push_back(
            std::abs(rot * scattered(sc, profile, point, t, spec) - As));
        rep.errors_incident0.push_back(
            std::abs(rot * incident0(sc, profile, point, t) - Ai0));
        rep.errors_reflected.push_back(
            std::abs(rot * reflected(sc, profile, point, t) - Ar));
        rep.errors_diffracted.push_back(
            std::abs(rot * diffracted(sc, profile, point, t, spec) - Ad));
    }

    // informational rate fit on the tail; the limit theorem gives no rate
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t k = 0; k < times.size(); ++k) {
        if (times[k] < rep.cushion) continue;
        double e = std::max(rep.errors_total[k], 1e-300);
        double x = std::log(times[k]);
        double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n >= 2) rep.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

}  // namespace halfplane
