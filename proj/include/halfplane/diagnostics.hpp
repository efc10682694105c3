#pragma once

#include <map>
#include <string>
#include <vector>

#include "halfplane/quadrature.hpp"
#include "halfplane/scenario.hpp"

namespace halfplane {

// One verification record.  pass is recomputable from the stored fields:
// two-sided checks need |measured - bound_or_target| <= tolerance, one-sided
// checks need Re(measured) <= Re(bound_or_target) + tolerance.
struct DiagnosticReport {
    std::string check_id;
    std::map<std::string, double> parameters;
    cplx measured{0.0, 0.0};
    cplx bound_or_target{0.0, 0.0};
    double tolerance = 0.0;
    bool one_sided = false;
    bool pass = false;
    std::string provenance;  // "paper-bound" | "trivial" | "derived-oracle"
};

bool recompute_pass(const DiagnosticReport& r);

// Known suites: kernel-decay, kernel-decomposition, causality, boundary,
// jumps, helmholtz, decay-fits, transform-consistency, green-identity, lap,
// sommerfeld-oracle.  Unknown ids raise UsageError.
const std::vector<std::string>& suite_ids();

// Deterministic report list for one suite; tol_scale multiplies every default
// tolerance (1.0 leaves the pinned defaults).
std::vector<DiagnosticReport> run_suite(const std::string& suite_id,
                                        const ScenarioConfig& sc,
                                        const Profile& profile,
                                        const QuadratureSpec& spec,
                                        double tol_scale = 1.0);

std::string report_to_json(const DiagnosticReport& r);
std::string reports_to_json(const std::vector<DiagnosticReport>& rs);

}  // namespace halfplane
