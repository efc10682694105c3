#include "halfplane/kernel.hpp"

#include <cmath>
#include <sstream>

#include "halfplane/errors.hpp"

namespace halfplane {

namespace {

constexpr double kQ = 0.25;

// csch^2 with the same i*pi argument reduction as coth.
cplx csch2(cplx z) {
    z = reduce_coth_argument(z);
    double x = z.real();
    if (std::abs(x) > 18.0) {
        double s = x > 0 ? 1.0 : -1.0;
        cplx e = std::exp(-2.0 * s * z);
        cplx d = 1.0 - e;
        return 4.0 * e / (d * d);
    }
    cplx sh = std::sinh(z);
    return 1.0 / (sh * sh);
}

// csch^2(z) - 1/z^2, analytic at 0.  Formed at the original z: csch^2 is
// periodic, 1/z^2 is not.
cplx csch2_minus_inv_sq(cplx z) {
    if (std::abs(z) < 0.5) {
        cplx z2 = z * z;
        return -1.0 / 3.0 +
               z2 * (1.0 / 15.0 +
                     z2 * (-2.0 / 189.0 +
                           z2 * (1.0 / 675.0 + z2 * (-2.0 / 10395.0))));
    }
    return csch2(z) - 1.0 / (z * z);
}

void check_coth_pole(cplx arg, cplx zeta, double scale, const char* who) {
    cplx r = reduce_coth_argument(arg);
    if (std::abs(r) < kPoleRadius * scale) {
        cplx pole = zeta - r / kQ;
        std::ostringstream os;
        os << who << ": argument within " << kPoleRadius << " of the pole at ("
           << pole.real() << ", " << pole.imag() << "i)";
        throw PoleProximityError(os.str(), pole);
    }
}

}  // namespace

cplx eval_U(cplx zeta, double alpha) {
    cplx a1 = kQ * (zeta - iu * (pi / 2.0) + iu * alpha);
    cplx a2 = kQ * (zeta - iu * (pi / 2.0) - iu * alpha);
    check_coth_pole(a1, zeta, kQ, "eval_U");
    check_coth_pole(a2, zeta, kQ, "eval_U");
    return coth(a1) - coth(a2);
}

cplx eval_Z(cplx z, double alpha) {
    return -eval_U(z - iu * (pi / 2.0), alpha) + eval_U(z - 5.0 * iu * (pi / 2.0), alpha);
}

cplx eval_calZ(cplx beta, double phi, const ScenarioConfig& sc) {
    double ep = sc.phi_plus - phi;
    double em = sc.phi_minus - phi;
    if ((std::abs(ep) < kPoleRadius || std::abs(em) < kPoleRadius) &&
        std::abs(beta) < 1e-6) {
        double eps = std::abs(ep) < std::abs(em) ? ep : em;
        std::ostringstream os;
        os << "eval_calZ: (beta, phi) within the pole margin of the singular ray "
           << (std::abs(ep) < std::abs(em) ? "phi_plus" : "phi_minus");
        throw PoleProximityError(os.str(), -iu * eps);
    }
    cplx a_p = (beta + iu * ep) / 4.0;
    cplx a_m = (beta + iu * em) / 4.0;
    cplx b_m = (beta - iu * (sc.phi_minus + phi)) / 4.0;
    cplx b_p = (beta - iu * (sc.phi_plus + phi)) / 4.0;
    check_coth_pole(a_p, beta, 0.25, "eval_calZ");
    check_coth_pole(a_m, beta, 0.25, "eval_calZ");
    return -coth(a_p) + coth(a_m) + coth(b_m) - coth(b_p);
}

cplx eval_dphi_calZ(cplx beta, double phi, const ScenarioConfig& sc) {
    double ep = sc.phi_plus - phi;
    double em = sc.phi_minus - phi;
    cplx a_p = (beta + iu * ep) / 4.0;
    cplx a_m = (beta + iu * em) / 4.0;
    cplx b_m = (beta - iu * (sc.phi_minus + phi)) / 4.0;
    cplx b_p = (beta - iu * (sc.phi_plus + phi)) / 4.0;
    check_coth_pole(a_p, beta, 0.25, "eval_dphi_calZ");
    check_coth_pole(a_m, beta, 0.25, "eval_dphi_calZ");
    return (iu / 4.0) * (-csch2(a_p) + csch2(a_m) + csch2(b_m) - csch2(b_p));
}

cplx KernelDecomposition::singular_part(cplx beta) const {
    return singular_coeff_plus / (beta + iu * eps_plus) +
           singular_coeff_minus / (beta + iu * eps_minus);
}

cplx KernelDecomposition::remainder(cplx beta) const {
    // coth(w/4) = 4/w + coth_minus_inv(w/4); the 4/w pieces are the explicit
    // singular fractions, so only the analytic remainders appear here.
    cplx a_p = (beta + iu * eps_plus) / 4.0;
    cplx a_m = (beta + iu * eps_minus) / 4.0;
    cplx b_m = (beta - iu * sum_minus) / 4.0;
    cplx b_p = (beta - iu * sum_plus) / 4.0;
    return -coth_minus_inv(a_p) + coth_minus_inv(a_m) + coth(b_m) - coth(b_p);
}

cplx KernelDecomposition::remainder_dphi(cplx beta) const {
    cplx a_p = (beta + iu * eps_plus) / 4.0;
    cplx a_m = (beta + iu * eps_minus) / 4.0;
    cplx b_m = (beta - iu * sum_minus) / 4.0;
    cplx b_p = (beta - iu * sum_plus) / 4.0;
    return (iu / 4.0) * (-csch2_minus_inv_sq(a_p) + csch2_minus_inv_sq(a_m) +
                         csch2(b_m) - csch2(b_p));
}

KernelDecomposition decompose_calZ(double phi, const ScenarioConfig& sc) {
    KernelDecomposition d;
    d.eps_plus = sc.phi_plus - phi;
    d.eps_minus = sc.phi_minus - phi;
    d.phi = phi;
    d.alpha = sc.alpha;
    d.sum_plus = sc.phi_plus + phi;
    d.sum_minus = sc.phi_minus + phi;
    return d;
}

cplx eval_sommerfeld_kernel(cplx gamma, double phi, double alpha) {
    auto term = [&](double sign_alpha) {
        cplx a = (-gamma + phi + sign_alpha * alpha) / 2.0;
        double k = std::round(a.real() / (2.0 * pi));
        cplx a_red = a - 2.0 * pi * k;
        if (std::abs(a_red) < kPoleRadius) {
            cplx pole = gamma + 2.0 * a_red;
            std::ostringstream os;
            os << "sommerfeld kernel pole at gamma = (" << pole.real() << ", "
               << pole.imag() << "i), gamma = phi " << (sign_alpha < 0 ? "-" : "+")
               << " alpha (mod 4pi)";
            throw PoleProximityError(os.str(), pole);
        }
        return 1.0 / (1.0 - std::exp(iu * a));
    };
    return term(-1.0) - term(+1.0);
}

}  // namespace halfplane
