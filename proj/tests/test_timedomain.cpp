#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halfplane/errors.hpp"
#include "halfplane/sommerfeld.hpp"
#include "halfplane/timedomain.hpp"

using namespace halfplane;

namespace {
const ScenarioConfig sc = make_scenario(2.0 * pi / 3.0, 1.0);
const Profile hv = Profile::heaviside();
const QuadratureSpec spec{};
}  // namespace

TEST_CASE("incident wave substitution values") {
    FieldPoint p{2.0, 1.0};
    double nx = n_dot_x(sc, p);
    CHECK(incident(sc, hv, p, nx - 1e-9) == cplx(0.0));
    // t - n.x = 1 with heaviside and omega0 = 1 gives e^{-i}
    cplx v = incident(sc, hv, p, nx + 1.0);
    CHECK(std::abs(v - cplx(std::cos(1.0), -std::sin(1.0))) < 1e-15);
    // phase structure: e^{i omega0 t} u_i = e^{-i omega0 rho cos(phi - alpha)}
    double t = nx + 5.0;
    cplx rotated = std::exp(iu * sc.omega0 * t) * incident(sc, hv, p, t);
    cplx expect = std::exp(-iu * sc.omega0 * p.rho * std::cos(p.phi - sc.alpha));
    CHECK(std::abs(rotated - expect) < 1e-14);
}

TEST_CASE("incident0 and incident1 regions") {
    double t = 10.0;
    FieldPoint lit{1.0, sc.phi_plus / 2.0};
    CHECK(incident0(sc, hv, lit, t) == incident(sc, hv, lit, t));
    CHECK(incident1(sc, hv, lit, t) == cplx(0.0));
    FieldPoint shadow{1.0, (sc.phi_plus + 2.0 * pi) / 2.0};
    CHECK(incident0(sc, hv, shadow, t) == cplx(0.0));
    CHECK(incident1(sc, hv, shadow, t) == incident(sc, hv, shadow, t));
    CHECK_THROWS_AS(incident0(sc, hv, FieldPoint{1.0, sc.phi_plus}, t), JumpLineError);
    CHECK_THROWS_AS(incident1(sc, hv, FieldPoint{1.0, sc.phi_plus}, t), JumpLineError);
    // identity u_i1 = u_i - u_i0 off the ray
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> up(0.01, 2.0 * pi - 0.01), ur(0.1, 3.0),
        ut(-2.0, 12.0);
    for (int k = 0; k < 100; ++k) {
        FieldPoint q{ur(rng), up(rng)};
        if (std::abs(q.phi - sc.phi_plus) < 1e-6) continue;
        double tau = ut(rng);
        cplx lhs = incident1(sc, hv, q, tau);
        cplx rhs = incident(sc, hv, q, tau) - incident0(sc, hv, q, tau);
        CHECK(std::abs(lhs - rhs) < 1e-15);
    }
}

TEST_CASE("reflected wave region, causality and screen cancellation") {
    double t = 8.0;
    CHECK(reflected(sc, hv, FieldPoint{1.5, sc.phi_minus + 0.3}, t) == cplx(0.0));
    CHECK(reflected(sc, hv, FieldPoint{1.5, 0.2}, -0.5) == cplx(0.0));
    CHECK_THROWS_AS(reflected(sc, hv, FieldPoint{1.0, sc.phi_minus}, t),
                    JumpLineError);
    // on the top face n.x = nbar.x, so incident + reflected cancel
    FieldPoint face{2.0, 0.0};
    cplx sum = incident0(sc, hv, face, t) + reflected(sc, hv, face, t);
    CHECK(std::abs(sum) < 1e-15);
}

TEST_CASE("diffracted wave: causal support is exact") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ur(0.3, 4.0), up(0.05, 2.0 * pi - 0.05),
        uf(0.0, 1.0);
    int done = 0;
    while (done < 100) {
        FieldPoint q{ur(rng), up(rng)};
        if (std::abs(q.phi - sc.phi_plus) < 1e-9) continue;
        if (std::abs(q.phi - sc.phi_minus) < 1e-9) continue;
        double t = q.rho * uf(rng);  // strictly before the edge wave arrives
        CHECK(diffracted(sc, hv, q, t, spec) == cplx(0.0));
        ++done;
    }
    CHECK_THROWS_AS(diffracted(sc, hv, FieldPoint{1.0, sc.phi_plus}, 3.0, spec),
                    JumpLineError);
}

TEST_CASE("diffracted long-time amplitude matches the stationary edge wave") {
    FieldPoint p{1.0, pi};
    double t = 500.0;
    cplx rotated = std::exp(iu * sc.omega0 * t) * diffracted(sc, hv, p, t, spec);
    cplx Ad = amplitude_diffracted(sc, p, spec);
    CHECK(std::abs(rotated - Ad) < 0.01 * std::abs(Ad));
}

TEST_CASE("dirichlet trace on both screen faces") {
    for (double rho : {0.5, 1.0, 3.0}) {
        for (double t : {0.7, 2.0, 9.0}) {
            cplx top = total(sc, hv, FieldPoint{rho, 0.0}, t, spec);
            cplx bottom = total(sc, hv, FieldPoint{rho, 2.0 * pi}, t, spec);
            CHECK(std::abs(top) < 1e-9);
            CHECK(std::abs(bottom) < 1e-9);
            // scattered boundary value: u_s = -u_i on the screen for t > 0
            cplx us = scattered(sc, hv, FieldPoint{rho, 0.0}, t, spec);
            cplx ui = incident(sc, hv, FieldPoint{rho, 0.0}, t);
            CHECK(std::abs(us + ui) < 1e-9);
        }
    }
}

TEST_CASE("scattered vanishes identically before the wave reaches the screen") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> ur(0.2, 4.0), up(0.01, 2.0 * pi - 0.01),
        ut(-6.0, -1e-6);
    for (int k = 0; k < 60; ++k) {
        FieldPoint q{ur(rng), up(rng)};
        CHECK(scattered(sc, hv, q, ut(rng), spec) == cplx(0.0));
    }
}

TEST_CASE("total field is continuous across the rays") {
    double t = 6.0, rho = 1.3;
    for (double ray : {sc.phi_plus, sc.phi_minus}) {
        cplx at_ray = total(sc, hv, FieldPoint{rho, ray}, t, spec);
        double prev_gap = 1e9;
        for (double delta : {1e-2, 1e-3, 1e-4}) {
            cplx lo = total(sc, hv, FieldPoint{rho, ray - delta}, t, spec);
            cplx hi = total(sc, hv, FieldPoint{rho, ray + delta}, t, spec);
            double gap = std::abs(hi - lo);
            CHECK(gap < prev_gap + 1e-9);          // shrinking with delta
            CHECK(std::abs(0.5 * (hi + lo) - at_ray) < 10.0 * delta + 1e-6);
            prev_gap = gap;
        }
        CHECK(prev_gap < 2e-3);  // O(delta) closure
    }
}

TEST_CASE("assembly identities of the sample set") {
    FieldPoint p{1.1, 2.4};
    double t = 5.0;
    auto samples = evaluate_components(
        sc, hv, p, t, spec,
        {Component::incident, Component::incident0, Component::reflected,
         Component::diffracted, Component::total, Component::scattered,
         Component::scattered0});
    auto get = [&](Component c) {
        for (const auto& s : samples)
            if (s.component == c) return s.value;
        return cplx(0.0);
    };
    CHECK(std::abs(get(Component::total) - (get(Component::incident0) +
                                            get(Component::reflected) +
                                            get(Component::diffracted))) < 1e-12);
    CHECK(std::abs(get(Component::scattered) -
                   (get(Component::total) - get(Component::incident))) < 1e-13);
    CHECK(std::abs(get(Component::scattered0) -
                   (get(Component::total) - get(Component::incident0))) < 1e-13);
}

TEST_CASE("edge trend: the diffracted wave stays bounded toward the tip") {
    // rho = 0 itself is out of scope; the probe runs down to 1e-3
    double t = 3.0;
    double worst = 0.0;
    for (double rho : {0.5, 0.1, 1e-2, 1e-3}) {
        for (double phi : {2.0, pi, 4.5}) {
            worst = std::max(worst, std::abs(diffracted(sc, hv, {rho, phi}, t, spec)));
        }
    }
    CHECK(worst < 3.0);
}

TEST_CASE("d'Alembert residual vanishes at second order") {
    // interior point away from the wavefront kink sets
    double x1 = -0.9, x2 = 0.8, t = 6.3;
    QuadratureSpec tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-15;
    double r1 = dalembert_residual(sc, hv, x1, x2, t, 2e-2, tight);
    double r2 = dalembert_residual(sc, hv, x1, x2, t, 1e-2, tight);
    CHECK(r2 < r1);
    double order = std::log2(r1 / r2);
    CHECK(order > 1.5);
    CHECK(order < 2.6);
    CHECK_THROWS_AS(dalembert_residual(sc, hv, 1.0, 0.0, 2.0, 1e-2, spec),
                    GeometryError);
}
