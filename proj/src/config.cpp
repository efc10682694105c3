#include "halfplane/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "halfplane/errors.hpp"

namespace halfplane {

namespace {

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    double x = to_double(key, v);
    int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError("config key '" + key + "': not an integer: '" + v + "'");
    return i;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config key '" + key + "': not a boolean: '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "alpha") cfg.alpha = to_double(key, value);
    else if (key == "omega0") cfg.omega0 = to_double(key, value);
    else if (key == "profile.kind") cfg.profile_kind = value;
    else if (key == "profile.lambda") cfg.profile_lambda = to_double(key, value);
    else if (key == "profile.table_path") cfg.profile_table_path = value;
    else if (key == "rho.min") cfg.rho_min = to_double(key, value);
    else if (key == "rho.max") cfg.rho_max = to_double(key, value);
    else if (key == "rho.count") cfg.rho_count = to_int(key, value);
    else if (key == "rho.log") cfg.rho_log = to_bool(key, value);
    else if (key == "phi.min") cfg.phi_min = to_double(key, value);
    else if (key == "phi.max") cfg.phi_max = to_double(key, value);
    else if (key == "phi.count") cfg.phi_count = to_int(key, value);
    else if (key == "mode") cfg.mode = value;
    else if (key == "t") cfg.t = to_double(key, value);
    else if (key == "omega.re") cfg.omega_re = to_double(key, value);
    else if (key == "omega.im") cfg.omega_im = to_double(key, value);
    else if (key == "rho") cfg.rho = to_double(key, value);
    else if (key == "phi") cfg.phi = to_double(key, value);
    else if (key == "times") cfg.times = to_list(key, value);
    else if (key == "beta.min") cfg.beta_min = to_double(key, value);
    else if (key == "beta.max") cfg.beta_max = to_double(key, value);
    else if (key == "beta.count") cfg.beta_count = to_int(key, value);
    else if (key == "kernel.phi_count") cfg.kdump_phi_count = to_int(key, value);
    else if (key == "jump.rho_min") cfg.jump_rho_min = to_double(key, value);
    else if (key == "jump.rho_max") cfg.jump_rho_max = to_double(key, value);
    else if (key == "jump.count") cfg.jump_count = to_int(key, value);
    else if (key == "jump.at") cfg.jump_at = value;
    else if (key == "tolerance_scale") cfg.tol_scale = to_double(key, value);
    else if (key == "rel_tol") cfg.quad.rel_tol = to_double(key, value);
    else if (key == "abs_tol") cfg.quad.abs_tol = to_double(key, value);
    else if (key == "max_subdiv") cfg.quad.max_subdivisions = to_int(key, value);
    else if (key == "threads") cfg.threads = to_int(key, value);
    else throw ConfigError("unknown config key: '" + key + "'");
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << path << ":" << lineno << ": expected key=value";
            throw ConfigError(os.str());
        }
        apply_config_entry(base, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    return base;
}

ScenarioConfig scenario_from(const RunConfig& cfg) {
    return make_scenario(cfg.alpha, cfg.omega0);
}

Profile profile_from(const RunConfig& cfg) {
    if (cfg.profile_kind == "heaviside") return Profile::heaviside();
    if (cfg.profile_kind == "smooth-ramp") return Profile::smooth_ramp(cfg.profile_lambda);
    if (cfg.profile_kind == "sampled") {
        if (cfg.profile_table_path.empty())
            throw ConfigError("sampled profile needs profile.table_path");
        return load_profile_table(cfg.profile_table_path);
    }
    throw ConfigError("unknown profile.kind: '" + cfg.profile_kind +
                      "' (heaviside | smooth-ramp | sampled)");
}

Profile load_profile_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open profile table: " + path);
    std::vector<double> s;
    std::vector<cplx> v;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream row(t);
        double a, re, im = 0.0;
        if (!(row >> a >> re)) {
            if (lineno == 1) continue;  // header row
            throw ConfigError("profile table: bad row at line " +
                              std::to_string(lineno));
        }
        row >> im;
        s.push_back(a);
        v.push_back(cplx(re, im));
    }
    return Profile::sampled(std::move(s), std::move(v));
}

void validate_grid(const RunConfig& cfg, bool needs_positive_rho) {
    if (cfg.rho_count < 2 || cfg.phi_count < 2)
        throw ConfigError("grid counts must be >= 2");
    if (!(cfg.rho_min < cfg.rho_max) || !(cfg.phi_min < cfg.phi_max))
        throw ConfigError("grid ranges must be ordered (min < max)");
    if (cfg.phi_min < 0.0 || cfg.phi_max > 2.0 * pi)
        throw ConfigError("phi range must stay inside [0, 2pi]");
    if (needs_positive_rho && !(cfg.rho_min > 0.0))
        throw ConfigError("rho_min must be > 0 for kernel-integral outputs");
    if (cfg.rho_log && !(cfg.rho_min > 0.0))
        throw ConfigError("log-spaced rho grid needs rho_min > 0");
}

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace halfplane
