// halfplane: field maps, verification suites and studies for time-dependent
// diffraction by a Dirichlet half-plane.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>

#include "halfplane/config.hpp"
#include "halfplane/diagnostics.hpp"
#include "halfplane/errors.hpp"
#include "halfplane/frequency.hpp"
#include "halfplane/kernel.hpp"
#include "halfplane/lap.hpp"
#include "halfplane/parallel.hpp"
#include "halfplane/sommerfeld.hpp"
#include "halfplane/timedomain.hpp"

using namespace halfplane;

namespace {

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ConfigError("cannot open output file: " + path);
    return file;
}

std::vector<double> linspace(double a, double b, int n, bool log_spaced) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        double w = static_cast<double>(i) / (n - 1);
        v[i] = log_spaced ? a * std::pow(b / a, w) : a + (b - a) * w;
    }
    return v;
}

// Components jump on the rays phi_pm; map output falls back to the average of
// the one-sided limits there.
cplx safe_eval(const std::function<cplx(FieldPoint)>& f, FieldPoint p) {
    try {
        return f(p);
    } catch (const JumpLineError&) {
        return 0.5 * (f({p.rho, p.phi - 1e-9}) + f({p.rho, p.phi + 1e-9}));
    }
}

int cmd_field_map(const RunConfig& cfg) {
    ScenarioConfig sc = scenario_from(cfg);
    Profile prof = profile_from(cfg);
    bool kernel_backed = cfg.components.empty();
    for (const auto& c : cfg.components)
        kernel_backed = kernel_backed || c == "diffracted" || c == "total" ||
                        c == "scattered" || c == "scattered0" || c == "total-fresnel";
    validate_grid(cfg, kernel_backed);

    std::vector<std::string> comps = cfg.components;
    if (comps.empty())
        comps = {"incident0", "reflected", "diffracted", "total", "scattered"};

    double param = cfg.mode == "time" ? cfg.t : (cfg.mode == "frequency" ? cfg.omega_im : 0.0);
    cplx omega(cfg.omega_re, cfg.omega_im);

    auto eval_one = [&](const std::string& name, FieldPoint p) -> cplx {
        if (cfg.mode == "time") {
            double t = cfg.t;
            if (name == "incident") return incident(sc, prof, p, t);
            if (name == "incident0")
                return safe_eval([&](FieldPoint q) { return incident0(sc, prof, q, t); }, p);
            if (name == "incident1")
                return safe_eval([&](FieldPoint q) { return incident1(sc, prof, q, t); }, p);
            if (name == "reflected")
                return safe_eval([&](FieldPoint q) { return reflected(sc, prof, q, t); }, p);
            if (name == "diffracted")
                return safe_eval(
                    [&](FieldPoint q) { return diffracted(sc, prof, q, t, cfg.quad); }, p);
            if (name == "total") return total(sc, prof, p, cfg.t, cfg.quad);
            if (name == "scattered") return scattered(sc, prof, p, cfg.t, cfg.quad);
            if (name == "scattered0") return scattered0(sc, prof, p, cfg.t, cfg.quad);
        } else if (cfg.mode == "stationary") {
            if (name == "incident") return amplitude_incident(sc, p);
            if (name == "incident0") return amplitude_incident0(sc, p);
            if (name == "incident1") return amplitude_incident1(sc, p);
            if (name == "reflected") return amplitude_reflected(sc, p);
            if (name == "diffracted") return amplitude_diffracted(sc, p, cfg.quad);
            if (name == "total")
                return amplitude_total(sc, p, AmplitudeRoute::kernel, cfg.quad);
            if (name == "total-fresnel")
                return amplitude_total(sc, p, AmplitudeRoute::fresnel, cfg.quad);
            if (name == "scattered") return amplitude_scattered(sc, p, cfg.quad);
        } else if (cfg.mode == "frequency") {
            if (name == "incident") return hat_incident(sc, prof, p, omega);
            if (name == "incident0")
                return safe_eval([&](FieldPoint q) { return hat_incident0(sc, prof, q, omega); }, p);
            if (name == "incident1")
                return safe_eval([&](FieldPoint q) { return hat_incident1(sc, prof, q, omega); }, p);
            if (name == "reflected")
                return safe_eval([&](FieldPoint q) { return hat_reflected(sc, prof, q, omega); }, p);
            if (name == "diffracted") return hat_diffracted(sc, prof, p, omega, cfg.quad);
            if (name == "total") return hat_total(sc, prof, p, omega, cfg.quad);
            if (name == "scattered") return hat_scattered(sc, prof, p, omega, cfg.quad);
        } else {
            throw ConfigError("unknown mode: '" + cfg.mode +
                              "' (time | stationary | frequency)");
        }
        throw ConfigError("unknown component '" + name + "' for mode " + cfg.mode);
    };

    auto rhos = linspace(cfg.rho_min, cfg.rho_max, cfg.rho_count, cfg.rho_log);
    auto phis = linspace(cfg.phi_min, cfg.phi_max, cfg.phi_count, false);
    size_t npts = rhos.size() * phis.size();
    std::vector<std::vector<cplx>> values(npts, std::vector<cplx>(comps.size()));
    parallel_for(npts, cfg.threads, [&](size_t idx) {
        FieldPoint p{rhos[idx / phis.size()], phis[idx % phis.size()]};
        for (size_t c = 0; c < comps.size(); ++c) values[idx][c] = eval_one(comps[c], p);
    });

    std::ofstream file;
    std::ostream& out = open_out(cfg.out_path, file);
    out << "rho,phi,param,component,re,im\n";
    for (size_t i = 0; i < rhos.size(); ++i) {
        for (size_t j = 0; j < phis.size(); ++j) {
            size_t idx = i * phis.size() + j;
            for (size_t c = 0; c < comps.size(); ++c) {
                out << format_float(rhos[i]) << ',' << format_float(phis[j]) << ','
                    << format_float(param) << ',' << comps[c] << ','
                    << format_float(values[idx][c].real()) << ','
                    << format_float(values[idx][c].imag()) << '\n';
            }
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    ScenarioConfig sc = scenario_from(cfg);
    Profile prof = profile_from(cfg);
    std::vector<std::string> suites = cfg.suites.empty() ? suite_ids() : cfg.suites;
    for (const auto& s : suites) {
        if (std::find(suite_ids().begin(), suite_ids().end(), s) == suite_ids().end())
            throw UsageError("unknown suite id: " + s);
    }

    std::vector<std::vector<DiagnosticReport>> per_suite(suites.size());
    parallel_for(suites.size(), cfg.threads, [&](size_t i) {
        per_suite[i] = run_suite(suites[i], sc, prof, cfg.quad, cfg.tol_scale);
    });

    std::vector<DiagnosticReport> all;
    bool ok = true;
    for (const auto& rs : per_suite)
        for (const auto& r : rs) {
            ok = ok && r.pass;
            all.push_back(r);
        }
    std::ofstream file;
    std::ostream& out = open_out(cfg.out_path, file);
    out << reports_to_json(all) << '\n';
    for (const auto& r : all) {
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.check_id << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_lap_study(const RunConfig& cfg) {
    ScenarioConfig sc = scenario_from(cfg);
    Profile prof = profile_from(cfg);
    LapReport rep = lap_study(sc, prof, {cfg.rho, cfg.phi}, cfg.times, cfg.quad);
    std::ofstream file;
    std::ostream& out = open_out(cfg.out_path, file);
    out << "t,err_total,err_scattered\n";
    for (size_t k = 0; k < rep.times.size(); ++k) {
        out << format_float(rep.times[k]) << ',' << format_float(rep.errors_total[k])
            << ',' << format_float(rep.errors_scattered[k]) << '\n';
    }
    return 0;
}

int cmd_kernel_dump(const RunConfig& cfg) {
    ScenarioConfig sc = scenario_from(cfg);
    if (cfg.beta_count < 2 || cfg.kdump_phi_count < 2)
        throw ConfigError("kernel-dump grid counts must be >= 2");
    if (!(cfg.beta_min < cfg.beta_max))
        throw ConfigError("beta range must be ordered");
    auto betas = linspace(cfg.beta_min, cfg.beta_max, cfg.beta_count, false);
    auto phis = linspace(0.0, 2.0 * pi, cfg.kdump_phi_count, false);
    std::ofstream file;
    std::ostream& out = open_out(cfg.out_path, file);
    out << "beta,phi,re,im\n";
    for (double beta : betas) {
        for (double phi : phis) {
            cplx v;
            try {
                v = eval_calZ(beta, phi, sc);
            } catch (const PoleProximityError&) {
                v = cplx(std::nan(""), std::nan(""));
            }
            out << format_float(beta) << ',' << format_float(phi) << ','
                << format_float(v.real()) << ',' << format_float(v.imag()) << '\n';
        }
    }
    return 0;
}

int cmd_jump_study(const RunConfig& cfg) {
    ScenarioConfig sc = scenario_from(cfg);
    Profile prof = profile_from(cfg);
    if (cfg.jump_count < 2) throw ConfigError("jump.count must be >= 2");
    JumpRay ray;
    if (cfg.jump_at == "phi_minus") ray = JumpRay::phi_minus;
    else if (cfg.jump_at == "phi_plus") ray = JumpRay::phi_plus;
    else throw ConfigError("jump.at must be phi_minus or phi_plus");
    cplx w(cfg.omega_re, cfg.omega_im);
    std::vector<double> deltas;
    for (int k = 0; k <= 6; ++k) deltas.push_back(0.02 / (1 << k));
    auto rhos = linspace(cfg.jump_rho_min, cfg.jump_rho_max, cfg.jump_count, false);

    std::vector<std::array<cplx, 4>> rows(rhos.size());
    parallel_for(rhos.size(), cfg.threads, [&](size_t i) {
        double r = rhos[i];
        Component geo = ray == JumpRay::phi_minus ? Component::reflected
                                                  : Component::incident1;
        cplx j_geo = jump(sc, prof, geo, 0, r, w, ray, deltas, cfg.quad).jump;
        cplx j_ud = jump(sc, prof, Component::diffracted, 0, r, w, ray, deltas,
                         cfg.quad).jump;
        cplx j_us = jump(sc, prof, Component::scattered, 0, r, w, ray, deltas,
                         cfg.quad).jump;
        cplx g = fourier_laplace(prof, w - sc.omega0, 50.0 / w.imag(), 1e-10);
        cplx closed = g * std::exp(iu * w * r);
        rows[i] = {j_geo, j_ud, j_us, closed};
    });

    std::ofstream file;
    std::ostream& out = open_out(cfg.out_path, file);
    out << "rho,j_geom_re,j_geom_im,j_ud_re,j_ud_im,j_us_re,j_us_im,closed_re,closed_im\n";
    for (size_t i = 0; i < rhos.size(); ++i) {
        out << format_float(rhos[i]);
        for (const cplx& v : rows[i])
            out << ',' << format_float(v.real()) << ',' << format_float(v.imag());
        out << '\n';
    }
    return 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& config_path,
                std::vector<std::string>* suites = nullptr) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
    cmd->add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--max-subdiv", cfg.quad.max_subdivisions,
                    "max adaptive subdivisions");
    cmd->add_option("--threads", cfg.threads,
                    "worker threads (0 = auto); results independent of N");
    cmd->add_option("--alpha", cfg.alpha, "incidence angle, pi/2 < alpha < pi");
    cmd->add_option("--omega0", cfg.omega0, "carrier frequency, > 0");
    if (suites) cmd->add_option("--suite", *suites, "suite id (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-dependent diffraction by a half-plane: fields, kernels, "
                 "verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::vector<std::string> suites;

    // the config file seeds the defaults; flags parsed afterwards override it
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) config_path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0) config_path = a.substr(9);
    }
    try {
        if (!config_path.empty()) cfg = load_config_file(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    auto* map = app.add_subcommand("field-map", "CSV field map over a (rho,phi) grid");
    add_common(map, cfg, config_path);
    map->add_option("--mode", cfg.mode, "time | stationary | frequency");
    map->add_option("--t", cfg.t, "evaluation time (time mode)");
    map->add_option("--omega-re", cfg.omega_re, "Re omega (frequency mode)");
    map->add_option("--omega-im", cfg.omega_im, "Im omega (frequency mode)");
    map->add_option("--rho-min", cfg.rho_min, "grid rho minimum");
    map->add_option("--rho-max", cfg.rho_max, "grid rho maximum");
    map->add_option("--rho-count", cfg.rho_count, "grid rho count");
    map->add_flag("--rho-log", cfg.rho_log, "log-spaced rho grid");
    map->add_option("--phi-min", cfg.phi_min, "grid phi minimum");
    map->add_option("--phi-max", cfg.phi_max, "grid phi maximum");
    map->add_option("--phi-count", cfg.phi_count, "grid phi count");
    map->add_option("--component", cfg.components, "component name (repeatable)");

    auto* ver = app.add_subcommand("verify", "run verification suites, emit JSON");
    add_common(ver, cfg, config_path, &suites);
    ver->add_option("--tol-scale", cfg.tol_scale, "tolerance multiplier");

    auto* lap = app.add_subcommand("lap-study", "limiting-amplitude convergence CSV");
    add_common(lap, cfg, config_path);
    lap->add_option("--rho", cfg.rho, "observation radius");
    lap->add_option("--phi", cfg.phi, "observation angle (off the rays)");
    lap->add_option("--times", cfg.times, "increasing times > rho");

    auto* ker = app.add_subcommand("kernel-dump", "kernel values CSV grid");
    add_common(ker, cfg, config_path);
    ker->add_option("--beta-min", cfg.beta_min, "beta minimum");
    ker->add_option("--beta-max", cfg.beta_max, "beta maximum");
    ker->add_option("--beta-count", cfg.beta_count, "beta count");
    ker->add_option("--phi-count", cfg.kdump_phi_count, "phi count");

    auto* jmp = app.add_subcommand("jump-study", "jump magnitudes along a rho sweep");
    add_common(jmp, cfg, config_path);
    jmp->add_option("--omega-re", cfg.omega_re, "Re omega");
    jmp->add_option("--omega-im", cfg.omega_im, "Im omega (> 0)");
    jmp->add_option("--rho-min", cfg.jump_rho_min, "sweep rho minimum");
    jmp->add_option("--rho-max", cfg.jump_rho_max, "sweep rho maximum");
    jmp->add_option("--count", cfg.jump_count, "sweep point count");
    jmp->add_option("--at", cfg.jump_at, "phi_minus | phi_plus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.suites = suites;
        if (map->parsed()) return cmd_field_map(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (lap->parsed()) return cmd_lap_study(cfg);
        if (ker->parsed()) return cmd_kernel_dump(cfg);
        if (jmp->parsed()) return cmd_jump_study(cfg);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const JumpLineError& e) {
        std::cerr << "jump-line error: " << e.what() << '\n';
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
