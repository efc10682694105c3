#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "halfplane/config.hpp"
#include "halfplane/diagnostics.hpp"
#include "halfplane/errors.hpp"
#include "halfplane/lap.hpp"
#include "halfplane/sommerfeld.hpp"

using namespace halfplane;

namespace {
const QuadratureSpec spec{};

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/halfplane_test_") + name;
    std::ofstream out(path);
    out << body;
    return path;
}
}  // namespace

TEST_CASE("lap study converges at the reference point") {
    ScenarioConfig sc = make_scenario(2.0 * pi / 3.0, 1.0);
    Profile hv = Profile::heaviside();
    FieldPoint p{1.0, pi};
    LapReport rep = lap_study(sc, hv, p, {10.0, 100.0, 1000.0}, spec);
    REQUIRE(rep.errors_total.size() == 3);
    CHECK(rep.errors_total[0] > rep.errors_total[1]);
    CHECK(rep.errors_total[1] > rep.errors_total[2]);
    CHECK(rep.errors_scattered[0] > rep.errors_scattered[1]);
    CHECK(rep.errors_scattered[1] > rep.errors_scattered[2]);
    cplx A = amplitude_total(sc, p, AmplitudeRoute::fresnel, spec);
    CHECK(rep.errors_total.back() <= 1e-2 * std::abs(A));
    CHECK(rep.errors_scattered.back() <=
          1e-2 * std::abs(amplitude_scattered(sc, p, spec)));
    // geometric components saturate exactly for the heaviside profile
    CHECK(rep.errors_incident0.back() < 1e-13);
    CHECK(rep.errors_reflected.back() < 1e-13);
    CHECK(rep.fitted_rate < 0.0);

    // smooth ramp converges to the same limit
    Profile ramp = Profile::smooth_ramp(1.0);
    LapReport rr = lap_study(sc, ramp, p, {10.0, 100.0, 1000.0}, spec);
    CHECK(rr.errors_total.back() <= 2e-2 * std::abs(A));

    CHECK_THROWS_AS(lap_study(sc, hv, {1.0, sc.phi_plus}, {10.0}, spec), DomainError);
    CHECK_THROWS_AS(lap_study(sc, hv, p, {0.5}, spec), ConfigError);
    CHECK_THROWS_AS(lap_study(sc, hv, p, {10.0, 5.0}, spec), ConfigError);
}

TEST_CASE("suite registry and determinism") {
    ScenarioConfig sc = make_scenario(2.0 * pi / 3.0, 1.0);
    Profile hv = Profile::heaviside();
    CHECK_THROWS_AS(run_suite("no-such-suite", sc, hv, spec), UsageError);
    auto a = run_suite("kernel-decomposition", sc, hv, spec);
    auto b = run_suite("kernel-decomposition", sc, hv, spec);
    CHECK(reports_to_json(a) == reports_to_json(b));
    for (const auto& r : a) {
        CHECK(r.pass == recompute_pass(r));  // stored fields reproduce the verdict
        CHECK((r.provenance == "paper-bound" || r.provenance == "trivial" ||
               r.provenance == "derived-oracle"));
    }
    // tolerance scaling flips a tight check when shrunk hard
    auto scaled = run_suite("kernel-decomposition", sc, hv, spec, 1e-12);
    bool some_fail = false;
    for (const auto& r : scaled) some_fail = some_fail || !r.pass;
    CHECK(some_fail);
}

TEST_CASE("config file parsing") {
    std::string path = write_temp("cfg", R"(# scenario
alpha = 2.0943951023931953
omega0 = 1.0
profile.kind = smooth-ramp
profile.lambda = 2.5
rho.count = 4
phi.count = 5
mode = time
t = 2.5
)");
    RunConfig cfg = load_config_file(path);
    CHECK(cfg.alpha == doctest::Approx(2.0943951023931953));
    CHECK(cfg.profile_kind == "smooth-ramp");
    CHECK(cfg.profile_lambda == 2.5);
    CHECK(cfg.rho_count == 4);
    CHECK(cfg.mode == "time");
    CHECK(cfg.t == 2.5);
    Profile p = profile_from(cfg);
    CHECK(p.kind() == Profile::Kind::smooth_ramp);

    CHECK_THROWS_AS(load_config_file("/nonexistent/cfg"), ConfigError);
    std::string bad = write_temp("cfg_bad", "alpha: 2.0\n");
    CHECK_THROWS_AS(load_config_file(bad), ConfigError);
    std::string unknown = write_temp("cfg_unknown", "frobnicate = 1\n");
    CHECK_THROWS_AS(load_config_file(unknown), ConfigError);
}

TEST_CASE("profile table loading") {
    std::string path = write_temp("table.csv", R"(s,f_real
0.0,0.0
0.5,0.6
1.0,0.9
2.0,1.0
4.0,1.0
)");
    Profile p = load_profile_table(path);
    CHECK(p.kind() == Profile::Kind::sampled);
    CHECK(std::abs(p.f(0.75) - cplx(0.75, 0.0)) < 1e-12);  // linear interpolation
    CHECK(p.f(-1.0) == cplx(0.0));
    CHECK(p.f(10.0) == cplx(1.0));
    // complex third column
    std::string path2 = write_temp("table2.csv", "0,0,0\n1,0.5,0.25\n2,1,0\n");
    Profile q = load_profile_table(path2);
    CHECK(std::abs(q.f(1.0) - cplx(0.5, 0.25)) < 1e-15);
}

TEST_CASE("grid validation") {
    RunConfig cfg;
    cfg.rho_count = 1;
    CHECK_THROWS_AS(validate_grid(cfg, true), ConfigError);
    cfg = RunConfig{};
    cfg.rho_min = 3.0;
    cfg.rho_max = 1.0;
    CHECK_THROWS_AS(validate_grid(cfg, true), ConfigError);
    cfg = RunConfig{};
    cfg.rho_min = 0.0;
    CHECK_THROWS_AS(validate_grid(cfg, true), ConfigError);
    cfg.rho_min = 0.5;
    validate_grid(cfg, true);  // no throw
}

TEST_CASE("float formatting round-trips") {
    for (double v : {1.0, pi, 1e-300, -2.2250738585072014e-308, 0.1}) {
        CHECK(std::stod(format_float(v)) == v);
    }
}
