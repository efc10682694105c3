#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halfplane/errors.hpp"
#include "halfplane/kernel.hpp"
#include "halfplane/quadrature.hpp"
#include "oracles.hpp"

using namespace halfplane;

namespace {
const ScenarioConfig sc = make_scenario(2.0 * pi / 3.0, 1.0);
const ScenarioConfig sc34 = make_scenario(3.0 * pi / 4.0, 1.0);

cplx from_ref(oracle::cplxl v) {
    return cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}
}  // namespace

TEST_CASE("U at i pi/2 collapses to 2 coth(i alpha / 4)") {
    double a = 2.0 * pi / 3.0;
    cplx got = eval_U(iu * pi / 2.0, a);
    cplx expect = 2.0 * coth(iu * a / 4.0);  // = -2i cot(alpha/4)
    CHECK(std::abs(got - expect) < 1e-14);
    CHECK(std::abs(got - cplx(0.0, -2.0 * std::sqrt(3.0))) < 1e-13);
}

TEST_CASE("U matches the reference evaluation away from poles") {
    for (double re : {10.0, -10.0, 3.0}) {
        for (double im : {0.0, 0.7, -1.9}) {
            cplx z(re, im);
            cplx ref = from_ref(oracle::U_ref(oracle::cplxl(re, im), 2.0L * 3.14159265358979323846L / 3.0L));
            CHECK(std::abs(eval_U(z, 2.0 * pi / 3.0) - ref) < 1e-13);
        }
    }
    // envelope |U| <= C e^{-|Re zeta|/2}
    double decayed = std::abs(eval_U(cplx(10.0, 0.3), 2.0 * pi / 3.0));
    CHECK(decayed < 8.0 * std::exp(-5.0));
}

TEST_CASE("U pole proximity") {
    double a = 2.0 * pi / 3.0;
    CHECK_THROWS_AS(eval_U(iu * (pi / 2.0 - a), a), PoleProximityError);
    try {
        eval_U(iu * (pi / 2.0 - a), a);
    } catch (const PoleProximityError& e) {
        CHECK(std::abs(e.pole - iu * (pi / 2.0 - a)) < 1e-9);
    }
}

TEST_CASE("Z defining composition and reference value") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ur(-4.0, 4.0);
    for (int k = 0; k < 30; ++k) {
        cplx z(ur(rng), ur(rng) * 0.2);
        cplx direct = eval_Z(z, sc34.alpha);
        cplx composed = -eval_U(z - iu * pi / 2.0, sc34.alpha) +
                        eval_U(z - 5.0 * iu * pi / 2.0, sc34.alpha);
        CHECK(std::abs(direct - composed) < 1e-13);
    }
    cplx ref = from_ref(oracle::Z_ref(oracle::cplxl(3.0L, 0.0L), 3.0L * 3.14159265358979323846L / 4.0L));
    CHECK(std::abs(eval_Z(cplx(3.0, 0.0), sc34.alpha) - ref) < 1e-13);
}

TEST_CASE("calZ equals Z(beta + 2 pi i - i phi) and the reference") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ub(-1.0, 1.0), up(0.05, 2.0 * pi - 0.05);
    for (int k = 0; k < 50; ++k) {
        double b = ub(rng), p = up(rng);
        if (std::hypot(b, sc.phi_plus - p) < 0.05) continue;
        if (std::hypot(b, sc.phi_minus - p) < 0.05) continue;
        cplx via_Z = eval_Z(cplx(b, 2.0 * pi - p), sc.alpha);
        cplx direct = eval_calZ(b, p, sc);
        CHECK(std::abs(via_Z - direct) < 1e-12 * (1.0 + std::abs(direct)));
        cplx ref = from_ref(oracle::calZ_ref(oracle::cplxl(b, 0.0L), p,
                                             static_cast<long double>(sc.alpha)));
        CHECK(std::abs(direct - ref) < 1e-10 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("calZ is odd in beta on both screen faces") {
    for (double b : {0.3, 1.0, 2.7}) {
        CHECK(std::abs(eval_calZ(b, 0.0, sc) + eval_calZ(-b, 0.0, sc)) < 1e-13);
        CHECK(std::abs(eval_calZ(b, 2.0 * pi, sc) + eval_calZ(-b, 2.0 * pi, sc)) < 1e-13);
    }
}

TEST_CASE("kernel exponential decay envelope") {
    // |calZ| e^{|beta|/2} stays within 1.5x of its value at |beta| = 1
    for (const ScenarioConfig& s : {sc, sc34}) {
        double at1 = 0.0;
        for (int j = 0; j <= 64; ++j) {
            double phi = 2.0 * pi * j / 64.0;
            at1 = std::max(at1, std::abs(eval_calZ(1.0, phi, s)) * std::exp(0.5));
            at1 = std::max(at1, std::abs(eval_calZ(-1.0, phi, s)) * std::exp(0.5));
        }
        double worst = 0.0;
        for (double b = 1.0; b <= 40.0; b += 0.75) {
            for (int j = 0; j <= 64; ++j) {
                double phi = 2.0 * pi * j / 64.0;
                worst = std::max(worst,
                                 std::abs(eval_calZ(b, phi, s)) * std::exp(b / 2.0));
                worst = std::max(worst,
                                 std::abs(eval_calZ(-b, phi, s)) * std::exp(b / 2.0));
            }
        }
        CHECK(worst / at1 <= 1.5);
    }
}

TEST_CASE("dphi calZ matches central differences and decays") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ub(-1.0, 1.0), up(0.2, 2.0 * pi - 0.2);
    const double h = 1e-5;
    for (int k = 0; k < 50; ++k) {
        double b = ub(rng), p = up(rng);
        if (std::hypot(b, sc.phi_plus - p) < 5e-2) continue;
        if (std::hypot(b, sc.phi_minus - p) < 5e-2) continue;
        cplx fd = (eval_calZ(b, p + h, sc) - eval_calZ(b, p - h, sc)) / (2.0 * h);
        CHECK(std::abs(eval_dphi_calZ(b, p, sc) - fd) <
              1e-6 * (1.0 + std::abs(fd)));
    }
    double at1 = std::abs(eval_dphi_calZ(1.0, 2.0, sc)) * std::exp(0.5);
    for (double b = 1.0; b <= 40.0; b += 1.3) {
        CHECK(std::abs(eval_dphi_calZ(b, 2.0, sc)) * std::exp(b / 2.0) <= 3.0 * at1 + 1.0);
    }
}

TEST_CASE("decomposition reconstructs calZ") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> ub(-1.0, 1.0), up(0.0, 2.0 * pi);
    int done = 0;
    while (done < 100) {
        double b = ub(rng), p = up(rng);
        if (std::hypot(b, sc.phi_plus - p) < 1e-6) continue;
        if (std::hypot(b, sc.phi_minus - p) < 1e-6) continue;
        KernelDecomposition d = decompose_calZ(p, sc);
        CHECK(std::abs(d.reconstruct(b) - eval_calZ(b, p, sc)) < 1e-10);
        ++done;
    }
}

TEST_CASE("remainder is bounded and smooth on the strip") {
    double C = 0.0, D = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double b = -1.0 + 2.0 * i / 200.0;
        for (int j = 0; j <= 200; ++j) {
            double p = 2.0 * pi * j / 200.0;
            KernelDecomposition d = decompose_calZ(p, sc);
            C = std::max(C, std::abs(d.remainder(b)));
            cplx fd = (d.remainder(b + 1e-5) - d.remainder(b - 1e-5)) / 2e-5;
            D = std::max(D, std::abs(fd));
        }
    }
    CHECK(C < 50.0);
    CHECK(D < 100.0);
    // the dphi remainder of the derivative decomposition is bounded too
    double C1 = 0.0;
    for (int i = 0; i <= 100; ++i) {
        double b = -1.0 + 2.0 * i / 100.0;
        for (int j = 0; j <= 100; ++j) {
            double p = 2.0 * pi * j / 100.0;
            C1 = std::max(C1, std::abs(decompose_calZ(p, sc).remainder_dphi(b)));
        }
    }
    CHECK(C1 < 100.0);
}

TEST_CASE("contour residues at the kernel poles") {
    // (1/2pi i) closed-circle integral of calZ around beta = -i eps_pm
    QuadratureSpec spec;
    KernelDecomposition d = decompose_calZ(pi, sc);
    auto residue_at = [&](cplx center, double radius) {
        auto f = [&](double th) {
            cplx beta = center + radius * std::exp(iu * th);
            return eval_calZ(beta, pi, sc) * (iu * radius * std::exp(iu * th));
        };
        return integrate(f, 0.0, 2.0 * pi, spec).value / (2.0 * pi * iu);
    };
    cplx rp = residue_at(-iu * d.eps_plus, std::min(std::abs(d.eps_plus) / 2.0, 0.2));
    cplx rm = residue_at(-iu * d.eps_minus, std::min(std::abs(d.eps_minus) / 2.0, 0.2));
    CHECK(std::abs(rp - cplx(-4.0, 0.0)) < 1e-8);
    CHECK(std::abs(rm - cplx(4.0, 0.0)) < 1e-8);
    // rectangle around both poles picks up the residue sum, and nothing else
    // lives inside |Im beta| < min(|eps|) + margin
    auto contour = [&](double half_w, double half_h) {
        auto seg = [&](cplx a, cplx b) {
            auto f = [&](double t) {
                cplx z = a + t * (b - a);
                return eval_calZ(z, pi, sc) * (b - a);
            };
            return integrate(f, 0.0, 1.0, spec).value;
        };
        cplx c1(half_w, half_h), c2(-half_w, half_h), c3(-half_w, -half_h),
            c4(half_w, -half_h);
        return seg(c1, c2) + seg(c2, c3) + seg(c3, c4) + seg(c4, c1);
    };
    // alpha = 2pi/3, phi = pi: poles at -+ i alpha; a box of height 0.9 < alpha
    // encloses nothing
    CHECK(std::abs(contour(0.8, 0.9)) < 1e-9);
    // a box of height 2.2 > alpha encloses both: sum of residues is -4 + 4 = 0,
    // so enclose asymmetrically to see each pole
    auto box = [&](double y0, double y1, double half_w) {
        auto seg = [&](cplx a, cplx b) {
            auto f = [&](double t) {
                cplx z = a + t * (b - a);
                return eval_calZ(z, pi, sc) * (b - a);
            };
            return integrate(f, 0.0, 1.0, spec).value;
        };
        cplx c1(half_w, y1), c2(-half_w, y1), c3(-half_w, y0), c4(half_w, y0);
        return (seg(c1, c2) + seg(c2, c3) + seg(c3, c4) + seg(c4, c1)) /
               (2.0 * pi * iu);
    };
    CHECK(std::abs(box(-2.5, -0.2, 0.8) - cplx(-4.0, 0.0)) < 1e-8);  // -i eps_plus
    CHECK(std::abs(box(0.2, 2.5, 0.8) - cplx(4.0, 0.0)) < 1e-8);     // -i eps_minus
}

TEST_CASE("calZ pole sits exactly on the singular ray direction") {
    bool threw = false;
    try {
        eval_calZ(cplx(0.0, 0.0), sc.phi_minus, sc);
    } catch (const PoleProximityError& e) {
        threw = true;
        CHECK(std::abs(e.pole) < 1e-9);  // beta = -i eps_minus = 0 on the ray
    }
    CHECK(threw);
    CHECK_THROWS_AS(eval_calZ(cplx(0.0, 0.0), sc.phi_plus, sc), PoleProximityError);
    // off the ray the same beta is regular
    CHECK_NOTHROW(eval_calZ(cplx(0.0, 0.0), sc.phi_minus + 0.05, sc));
}

TEST_CASE("second-order singular coefficients of dphi calZ") {
    // contour extraction of the (beta + i eps)^{-2} coefficients: -4i and +4i
    QuadratureSpec spec;
    KernelDecomposition d = decompose_calZ(pi, sc);
    auto coeff2_at = [&](double eps) {
        double radius = std::min(std::abs(eps) / 2.0, 0.2);
        auto f = [&](double th) {
            cplx beta = -iu * eps + radius * std::exp(iu * th);
            return eval_dphi_calZ(beta, pi, sc) * (beta + iu * eps) *
                   (iu * radius * std::exp(iu * th));
        };
        return integrate(f, 0.0, 2.0 * pi, spec).value / (2.0 * pi * iu);
    };
    CHECK(std::abs(coeff2_at(d.eps_plus) - cplx(0.0, -4.0)) < 1e-8);
    CHECK(std::abs(coeff2_at(d.eps_minus) - cplx(0.0, 4.0)) < 1e-8);
}

TEST_CASE("jump of calZ across phi_minus is carried by the eps_minus fraction") {
    double b = 0.37;
    for (double delta : {1e-3, 1e-4}) {
        cplx above = eval_calZ(b, sc.phi_minus + delta, sc);
        cplx below = eval_calZ(b, sc.phi_minus - delta, sc);
        cplx expect = 4.0 * (1.0 / (b - iu * delta) - 1.0 / (b + iu * delta));
        CHECK(std::abs((above - below) - expect) < 20.0 * delta);
    }
}

TEST_CASE("sommerfeld kernel poles and decay") {
    double phi = 2.0, a = sc.alpha;
    CHECK_THROWS_AS(eval_sommerfeld_kernel(cplx(phi - a, 0.0), phi, a),
                    PoleProximityError);
    CHECK_THROWS_AS(eval_sommerfeld_kernel(cplx(phi + a, 0.0), phi, a),
                    PoleProximityError);
    CHECK_THROWS_AS(eval_sommerfeld_kernel(cplx(phi - a + 4.0 * pi, 0.0), phi, a),
                    PoleProximityError);
    cplx far = eval_sommerfeld_kernel(cplx(1.0, -20.0), phi, a);
    CHECK(std::abs(far) < 2.0 * std::exp(-10.0) * 1.5);
}

TEST_CASE("sommerfeld kernel is the rotated kernel U up to a factor of 2") {
    // zeta(gamma, phi) = U(i(phi - gamma + pi/2)) / 2; the factor is measured
    // at one regular point and then asserted everywhere
    double phi = 2.0, a = sc.alpha;
    cplx g0(0.7, -0.3);
    cplx ratio = eval_U(iu * (phi - g0 + pi / 2.0), a) /
                 eval_sommerfeld_kernel(g0, phi, a);
    CHECK(std::abs(ratio - cplx(2.0, 0.0)) < 1e-12);
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> ur(-3.0, 3.0);
    for (int k = 0; k < 25; ++k) {
        cplx g(ur(rng), ur(rng) * 0.5);
        if (std::abs(std::remainder(g.real() - (phi - a), 4.0 * pi)) < 0.05) continue;
        if (std::abs(std::remainder(g.real() - (phi + a), 4.0 * pi)) < 0.05) continue;
        cplx zeta = eval_sommerfeld_kernel(g, phi, a);
        cplx rotated = eval_U(iu * (phi - g + pi / 2.0), a);
        CHECK(std::abs(rotated - 2.0 * zeta) < 1e-10 * (1.0 + std::abs(zeta)));
    }
    // equal pole residue up to the same factor: small-circle integrals
    QuadratureSpec spec;
    auto res = [&](const std::function<cplx(cplx)>& f, cplx center) {
        auto g = [&](double th) {
            cplx z = center + 0.05 * std::exp(iu * th);
            return f(z) * (iu * 0.05 * std::exp(iu * th));
        };
        return integrate(g, 0.0, 2.0 * pi, spec).value / (2.0 * pi * iu);
    };
    cplx rz = res([&](cplx g) { return eval_sommerfeld_kernel(g, phi, a); },
                  cplx(phi - a, 0.0));
    cplx ru = res([&](cplx g) { return eval_U(iu * (phi - g + pi / 2.0), a); },
                  cplx(phi - a, 0.0));
    CHECK(std::abs(rz - cplx(0.0, -2.0)) < 1e-10);  // residue of zeta itself
    CHECK(std::abs(ru - 2.0 * rz) < 1e-10);
}
