#include "halfplane/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <queue>
#include <sstream>

#include "halfplane/errors.hpp"

namespace halfplane {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double error;
    double resabs;
};

Panel evaluate_panel(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    cplx kron = kWgk[7] * fv[7];
    cplx gauss = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::abs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= h;
    gauss *= h;
    resabs *= std::abs(h);
    cplx mean = kron / (b - a);
    double resasc = 0.0;
    resasc += kWgk[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    resasc *= std::abs(h);
    double diff = std::abs(kron - gauss);
    double err = diff;
    if (resasc > 0.0 && diff > 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
    err = std::max(err, 50.0 * DBL_EPSILON * resabs);
    return Panel{a, b, kron, err, resabs};
}

bool splittable(const Panel& p) {
    double scale = std::max({1.0, std::abs(p.a), std::abs(p.b)});
    return (p.b - p.a) > 64.0 * DBL_EPSILON * scale;
}

}  // namespace

Integral integrate(const std::function<cplx(double)>& f, double a, double b,
                   const QuadratureSpec& spec,
                   const std::vector<double>& breakpoints) {
    Integral out;
    if (!(b > a)) return out;

    std::vector<double> pts{a, b};
    for (double x : breakpoints)
        if (x > a && x < b) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto cmp = [](const Panel& l, const Panel& r) { return l.error < r.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
    std::vector<Panel> settled;  // too narrow to split further

    cplx total = 0.0;
    double err_total = 0.0;
    double resabs_total = 0.0;
    long evals = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p = evaluate_panel(f, pts[i], pts[i + 1]);
        evals += 15;
        total += p.value;
        err_total += p.error;
        resabs_total += p.resabs;
        heap.push(p);
    }

    int splits = 0;
    while (true) {
        double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (err_total <= tol) break;
        if (heap.empty()) break;
        if (splits >= spec.max_subdivisions) break;
        Panel worst = heap.top();
        if (!splittable(worst)) {
            heap.pop();
            settled.push_back(worst);
            continue;
        }
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel l = evaluate_panel(f, worst.a, mid);
        Panel r = evaluate_panel(f, mid, worst.b);
        evals += 30;
        ++splits;
        total += l.value + r.value - worst.value;
        err_total += l.error + r.error - worst.error;
        resabs_total += l.resabs + r.resabs - worst.resabs;
        heap.push(l);
        heap.push(r);
    }

    // Recompute sums left-to-right with compensation; the incremental updates
    // above only steer the refinement.
    std::vector<Panel> all = std::move(settled);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    cplx sum = 0.0, comp = 0.0;
    double err = 0.0;
    for (const Panel& p : all) {
        cplx y = p.value - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += p.error;
    }
    out.value = sum;
    out.error = err;
    out.evaluations = evals;

    double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(sum));
    double roundoff_floor = 200.0 * DBL_EPSILON * resabs_total;
    if (err > tol && err > roundoff_floor) {
        std::ostringstream os;
        os << "adaptive quadrature stalled at error " << err << " (target " << tol
           << ") after " << splits << " subdivisions";
        throw PrecisionError(os.str(), err);
    }
    return out;
}

double eps0_for(cplx omega) {
    double w1 = std::abs(omega.real());
    double w2 = omega.imag();
    if (w2 <= 0.0) throw DomainError("eps0 defined for Im(omega) > 0 only");
    auto ok = [&](double r) {
        double h = std::cosh(r) - 1.0;
        if (!(h < 0.25)) return false;
        if (w1 * h > w2 / 4.0) return false;
        return true;
    };
    double lo = 0.0, hi = 0.9;
    if (ok(hi)) return hi / 2.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return 0.5 * lo * 0.999;
}

std::vector<double> phase_breakpoints(double a, double b, double osc_scale) {
    std::vector<double> pts;
    if (!(b > a) || osc_scale <= 0.0) return pts;
    auto step_at = [&](double x) {
        double rate = osc_scale * std::cosh(x) + 1.0;
        return std::max(1e-4, std::min(0.5, 6.0 * pi / rate));
    };
    // march outward from 0 where the phase is slowest
    if (a < 0.0 && b > 0.0) {
        for (double x = 0.0; x < b;) {
            x += step_at(x);
            if (x < b) pts.push_back(x);
            if (pts.size() > 60000) break;
        }
        for (double x = 0.0; x > a;) {
            x -= step_at(x);
            if (x > a) pts.push_back(x);
            if (pts.size() > 120000) break;
        }
    } else {
        double lo = std::min(std::abs(a), std::abs(b));
        double hi = std::max(std::abs(a), std::abs(b));
        double sgn = (a + b >= 0.0) ? 1.0 : -1.0;
        for (double x = lo; x < hi;) {
            x += step_at(x);
            if (x < hi) pts.push_back(sgn * x);
            if (pts.size() > 60000) break;
        }
    }
    return pts;
}

double frequency_truncation(double rho, cplx omega, double budget, double growth) {
    double w2 = omega.imag();
    if (w2 <= 0.0) throw DomainError("frequency truncation needs Im(omega) > 0");
    auto g = [&](double B) {
        return w2 * rho * (std::cosh(B) - 1.0) + (0.5 - growth) * B - budget;
    };
    double hi = 1.0;
    while (g(hi) < 0.0 && hi < 60.0) hi *= 1.5;
    double lo = hi / 1.5 < 1.0 ? 0.0 : hi / 1.5;
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::max(1.0, hi);
}

namespace {

std::function<cplx(cplx)> weight_fn(SingWeight w) {
    switch (w) {
        case SingWeight::unit:
            return [](cplx) -> cplx { return 1.0; };
        case SingWeight::cosh_w:
            return [](cplx b) { return std::cosh(b); };
        case SingWeight::sinh_w:
            return [](cplx b) { return std::sinh(b); };
        case SingWeight::sinh_sq:
            return [](cplx b) {
                cplx s = std::sinh(b);
                return s * s;
            };
    }
    return [](cplx) -> cplx { return 1.0; };
}

std::function<cplx(cplx)> weight_derivative_fn(SingWeight w) {
    switch (w) {
        case SingWeight::unit:
            return [](cplx) -> cplx { return 0.0; };
        case SingWeight::cosh_w:
            return [](cplx b) { return std::sinh(b); };
        case SingWeight::sinh_w:
            return [](cplx b) { return std::cosh(b); };
        case SingWeight::sinh_sq:
            return [](cplx b) { return std::sinh(2.0 * b); };
    }
    return [](cplx) -> cplx { return 0.0; };
}

double weight_growth(SingWeight w) {
    switch (w) {
        case SingWeight::unit:
            return 0.0;
        case SingWeight::cosh_w:
        case SingWeight::sinh_w:
            return 1.0;
        case SingWeight::sinh_sq:
            return 2.0;
    }
    return 0.0;
}

}  // namespace

cplx singular_unit_integral(SingWeight w, int m, double rho, cplx omega, double eps,
                            const QuadratureSpec& spec, bool force_direct) {
    if (omega.imag() <= 0.0)
        throw DomainError("singular unit integral requires Im(omega) > 0");
    if (m < 0 || m > 2) throw DomainError("pole order m must be 0, 1 or 2");
    auto wf = weight_fn(w);
    auto phase = [&](cplx beta) { return std::exp(iu * omega * rho * std::cosh(beta)); };
    double osc = std::abs(omega.real()) * rho;

    if (m == 0) {
        auto f = [&](double b) { return wf(b) * phase(b); };
        return integrate(f, -1.0, 1.0, spec, phase_breakpoints(-1.0, 1.0, osc)).value;
    }

    double eps0 = spec.deformation_radius > 0.0 ? spec.deformation_radius / 2.0
                                                : eps0_for(omega);
    double r = 2.0 * eps0;

    if (force_direct || std::abs(eps) >= eps0) {
        if (eps == 0.0)
            throw DomainError("direct unit-interval integration through the pole");
        auto f = [&](double b) {
            cplx den = b + iu * eps;
            cplx d = m == 1 ? den : den * den;
            return wf(b) * phase(b) / d;
        };
        std::vector<double> bp = phase_breakpoints(-1.0, 1.0, osc);
        for (double s = std::abs(eps); s < 1.0; s *= 4.0) {
            bp.push_back(s);
            bp.push_back(-s);
        }
        return integrate(f, -1.0, 1.0, spec, bp).value;
    }

    if (eps == 0.0 && m == 2)
        throw DomainError("principal value undefined for a second-order pole");

    // deformed path [-1,-r] u gamma_r u [r,1] below the real axis
    auto f_line = [&](double b) {
        cplx den = b + iu * eps;
        cplx d = m == 1 ? den : den * den;
        return wf(b) * phase(b) / d;
    };
    std::vector<double> bp = phase_breakpoints(-1.0, 1.0, osc);
    cplx I2 = integrate(f_line, -1.0, -r, spec, bp).value +
              integrate(f_line, r, 1.0, spec, bp).value;
    auto f_arc = [&](double theta) {
        cplx beta = r * std::exp(iu * theta);
        cplx den = beta + iu * eps;
        cplx d = m == 1 ? den : den * den;
        return wf(beta) * phase(beta) / d * (iu * r * std::exp(iu * theta));
    };
    cplx I1 = integrate(f_arc, -pi, 0.0, spec).value;

    cplx value = I1 + I2;
    cplx pole = -iu * eps;
    cplx res;
    if (m == 1) {
        res = wf(pole) * std::exp(iu * omega * rho * std::cos(eps));
    } else {
        res = (weight_derivative_fn(w)(pole) +
               wf(pole) * iu * omega * rho * std::sinh(pole)) *
              std::exp(iu * omega * rho * std::cos(eps));
    }
    if (eps > 0.0) value -= 2.0 * pi * iu * res;
    if (eps == 0.0) value -= pi * iu * res;  // symmetric principal value (m == 1)
    return value;
}

cplx integrate_K(KKind kind, double rho, cplx omega, double eps,
                 const QuadratureSpec& spec, bool force_direct) {
    switch (kind) {
        case KKind::K0:
            return singular_unit_integral(SingWeight::unit, 1, rho, omega, eps, spec,
                                          force_direct);
        case KKind::K1:
            // cosh(beta) e^{i omega rho cosh beta} as defined; eps plays no role
            return singular_unit_integral(SingWeight::cosh_w, 0, rho, omega, eps, spec,
                                          force_direct);
        case KKind::K2:
            return singular_unit_integral(SingWeight::unit, 2, rho, omega, eps, spec,
                                          force_direct);
    }
    throw UsageError("unknown K kind");
}

cplx integrate_frequency_kernel(const ScenarioConfig& sc, double rho, double phi,
                                cplx omega, const QuadratureSpec& spec, SingWeight w,
                                double truncation_override) {
    if (omega.imag() <= 0.0)
        throw DomainError("frequency kernel integral requires Im(omega) > 0");
    if (!(rho > 0.0)) throw DomainError("frequency kernel integral requires rho > 0");
    auto wf = weight_fn(w);
    double budget = -std::log(std::min(spec.abs_tol, 1e-13)) + 4.0;
    double B = truncation_override > 0.0
                   ? truncation_override
                   : frequency_truncation(rho, omega, budget, weight_growth(w));
    double osc = std::abs(omega.real()) * rho;

    cplx outer = 0.0;
    if (B > 1.0 + 1e-12) {
        auto f = [&](double b) {
            return eval_calZ(b, phi, sc) * wf(b) *
                   std::exp(iu * omega * rho * std::cosh(b));
        };
        outer = integrate(f, 1.0, B, spec, phase_breakpoints(1.0, B, osc)).value +
                integrate(f, -B, -1.0, spec, phase_breakpoints(-B, -1.0, osc)).value;
    }

    KernelDecomposition dec = decompose_calZ(phi, sc);
    cplx sing = dec.singular_coeff_plus * singular_unit_integral(w, 1, rho, omega,
                                                                 dec.eps_plus, spec) +
                dec.singular_coeff_minus * singular_unit_integral(w, 1, rho, omega,
                                                                  dec.eps_minus, spec);
    auto f_smooth = [&](double b) {
        return dec.remainder(b) * wf(b) * std::exp(iu * omega * rho * std::cosh(b));
    };
    cplx smooth =
        integrate(f_smooth, -1.0, 1.0, spec, phase_breakpoints(-1.0, 1.0, osc)).value;
    return outer + sing + smooth;
}

cplx integrate_timedomain_kernel(const ScenarioConfig& sc, const Profile& profile,
                                 double rho, double phi, double t,
                                 const QuadratureSpec& spec) {
    if (!(rho > 0.0)) throw DomainError("time-domain kernel integral requires rho > 0");
    if (t <= rho) return 0.0;  // F(t - rho cosh beta) vanishes for every beta

    const double Bstar = std::acosh(t / rho);
    const double w0 = sc.omega0;
    KernelDecomposition dec = decompose_calZ(phi, sc);
    const double eps[2] = {dec.eps_plus, dec.eps_minus};
    const cplx coeff[2] = {dec.singular_coeff_plus, dec.singular_coeff_minus};
    constexpr double kSubtractBelow = 0.25;
    bool subtract[2];
    for (int j = 0; j < 2; ++j)
        subtract[j] = std::abs(eps[j]) < kSubtractBelow;

    const cplx F0 = profile.modulated(t - rho, w0);

    auto folded = [&](double b) {
        cplx F = profile.modulated(t - rho * std::cosh(b), w0);
        cplx acc = (dec.remainder(b) + dec.remainder(-b)) * F;
        for (int j = 0; j < 2; ++j) {
            if (eps[j] == 0.0) continue;  // folded singular pair cancels exactly
            cplx s = coeff[j] * (-2.0 * iu * eps[j]) / (b * b + eps[j] * eps[j]);
            acc += s * (subtract[j] ? F - F0 : F);
        }
        return acc;
    };

    std::vector<double> bp = phase_breakpoints(0.0, Bstar, w0 * rho);
    for (int j = 0; j < 2; ++j)
        if (subtract[j] && eps[j] != 0.0)
            for (double s = std::abs(eps[j]); s < Bstar; s *= 4.0) bp.push_back(s);
    if (profile.kind() == Profile::Kind::sampled) {
        // interpolation kinks land at beta = arccosh((t - s_k)/rho); past the
        // table the profile is constant, so only sweep the tabulated range
        double ext = std::min(profile.table_extent(), t - rho);
        double step = std::max(profile.table_extent() / 64.0, 1e-3);
        for (double sk = 0.0; sk <= ext; sk += step) {
            double c = (t - sk) / rho;
            if (c > 1.0) bp.push_back(std::acosh(c));
        }
    }

    cplx value = integrate(folded, 0.0, Bstar, spec, bp).value;
    for (int j = 0; j < 2; ++j) {
        if (subtract[j] && eps[j] != 0.0)
            value += coeff[j] * F0 * (-2.0 * iu) * std::atan(Bstar / eps[j]);
    }
    return value;
}

cplx integrate_stationary_kernel(const ScenarioConfig& sc, double rho, double phi,
                                 double omega0, const QuadratureSpec& spec) {
    if (!(rho > 0.0)) throw DomainError("stationary kernel integral requires rho > 0");
    if (!(omega0 > 0.0)) throw DomainError("stationary kernel integral requires omega0 > 0");
    KernelDecomposition dec = decompose_calZ(phi, sc);
    const double eps[2] = {dec.eps_plus, dec.eps_minus};
    const cplx coeff[2] = {dec.singular_coeff_plus, dec.singular_coeff_minus};

    double budget = -std::log(std::min(spec.abs_tol, 1e-13)) + 4.0;
    auto g = [&](double X) {
        return omega0 * rho * std::sinh(X) * std::tanh(X) + 0.5 * X - budget;
    };
    double X = 1.0;
    while (g(X) < 0.0 && X < 60.0) X *= 1.5;

    auto path = [](double x) { return cplx(x, gudermannian(x)); };
    auto integrand = [&](double x) {
        cplx beta = path(x);
        cplx kernel_sum = dec.remainder(beta) + dec.remainder(-beta);
        for (int j = 0; j < 2; ++j) {
            if (eps[j] == 0.0) continue;
            kernel_sum += coeff[j] * (-2.0 * iu * eps[j]) /
                          (beta * beta + eps[j] * eps[j]);
        }
        cplx cosh_on_path = 1.0 + iu * (std::sinh(x) * std::tanh(x));
        cplx jac = 1.0 + iu * sech(x);
        return kernel_sum * jac * std::exp(iu * omega0 * rho * cosh_on_path);
    };

    std::vector<double> bp;
    for (int j = 0; j < 2; ++j)
        for (double s = std::max(1e-9, std::abs(eps[j])); s < 1.0; s *= 4.0)
            bp.push_back(s);
    bp.push_back(X / 2.0);
    return integrate(integrand, 0.0, X, spec, bp).value;
}

cplx integrate_stationary_kernel_realaxis(const ScenarioConfig& sc, double rho,
                                          double phi, double omega0,
                                          const QuadratureSpec& spec, double B) {
    KernelDecomposition dec = decompose_calZ(phi, sc);
    const double eps[2] = {dec.eps_plus, dec.eps_minus};
    const cplx coeff[2] = {dec.singular_coeff_plus, dec.singular_coeff_minus};
    auto folded = [&](double b) {
        cplx ph = std::exp(iu * omega0 * rho * std::cosh(b));
        cplx acc = (dec.remainder(b) + dec.remainder(-b)) * ph;
        for (int j = 0; j < 2; ++j) {
            if (eps[j] == 0.0) continue;
            acc += coeff[j] * (-2.0 * iu * eps[j]) / (b * b + eps[j] * eps[j]) * ph;
        }
        return acc;
    };
    return integrate(folded, 0.0, B, spec, phase_breakpoints(0.0, B, omega0 * rho)).value;
}

}  // namespace halfplane
