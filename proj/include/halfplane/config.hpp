#pragma once

#include <string>
#include <vector>

#include "halfplane/quadrature.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

// Run configuration: scenario + profile keys from the plain-text config file
// (key=value), grid/time/frequency parameters, output control.  CLI flags
// override file values.
struct RunConfig {
    double alpha = 2.0 * pi / 3.0;
    double omega0 = 1.0;
    std::string profile_kind = "heaviside";
    double profile_lambda = 1.0;
    std::string profile_table_path;

    // field-map grid
    double rho_min = 0.5, rho_max = 5.0;
    int rho_count = 10;
    bool rho_log = false;
    double phi_min = 0.0, phi_max = 2.0 * pi;
    int phi_count = 16;
    std::string mode = "stationary";  // time | stationary | frequency
    double t = 1.0;
    double omega_re = 1.0, omega_im = 1.0;
    std::vector<std::string> components;

    // lap-study
    double rho = 1.0, phi = pi;
    std::vector<double> times{10.0, 100.0, 1000.0};

    // kernel-dump
    double beta_min = -10.0, beta_max = 10.0;
    int beta_count = 201;
    int kdump_phi_count = 9;

    // jump-study
    double jump_rho_min = 0.5, jump_rho_max = 2.0;
    int jump_count = 8;
    std::string jump_at = "phi_minus";

    // verification
    std::vector<std::string> suites;
    double tol_scale = 1.0;

    QuadratureSpec quad;
    int threads = 0;  // 0 = auto; output independent of the worker count
    std::string out_path;
};

// Parse a key=value file ('#' comments, blank lines ignored).
RunConfig load_config_file(const std::string& path, RunConfig base = {});
// Parse a single key=value assignment into cfg; unknown keys raise ConfigError.
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

ScenarioConfig scenario_from(const RunConfig& cfg);
Profile profile_from(const RunConfig& cfg);

// Two-column (s, f_real[, f_imag]) CSV with optional header row.
Profile load_profile_table(const std::string& path);

// Grid checks for field-map style outputs (counts >= 2, ordered ranges,
// rho_min > 0 when kernel integrals are involved).
void validate_grid(const RunConfig& cfg, bool needs_positive_rho);

// 17-significant-digit formatting used by every CSV writer.
std::string format_float(double v);

}  // namespace halfplane
