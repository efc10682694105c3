#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halfplane/diagnostics.hpp"
#include "halfplane/errors.hpp"
#include "halfplane/frequency.hpp"
#include "halfplane/kernel.hpp"
#include "halfplane/lap.hpp"
#include "halfplane/quadrature.hpp"
#include "halfplane/sommerfeld.hpp"
#include "halfplane/timedomain.hpp"

namespace py = pybind11;
using namespace halfplane;

namespace {

FieldPoint as_point(double rho, double phi) { return make_point(rho, phi); }

AmplitudeRoute route_from(const std::string& r) {
    if (r == "kernel") return AmplitudeRoute::kernel;
    if (r == "fresnel") return AmplitudeRoute::fresnel;
    throw UsageError("route must be 'kernel' or 'fresnel'");
}

Component component_from(const std::string& c) {
    for (Component k : {Component::incident, Component::incident0,
                        Component::incident1, Component::reflected,
                        Component::diffracted, Component::total,
                        Component::scattered, Component::scattered0}) {
        if (c == component_name(k)) return k;
    }
    throw UsageError("unknown component: " + c);
}

py::dict report_to_dict(const DiagnosticReport& r) {
    py::dict d;
    d["check"] = r.check_id;
    d["params"] = r.parameters;
    d["value"] = r.measured;
    d["bound"] = r.bound_or_target;
    d["tolerance"] = r.tolerance;
    d["one_sided"] = r.one_sided;
    d["pass"] = r.pass;
    d["provenance"] = r.provenance;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "time-dependent diffraction by a Dirichlet half-plane";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleProximityError>(m, "PoleProximityError",
                                               PyExc_ValueError);
    py::register_exception<JumpLineError>(m, "JumpLineError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    py::class_<ScenarioConfig>(m, "Scenario")
        .def_readonly("alpha", &ScenarioConfig::alpha)
        .def_readonly("omega0", &ScenarioConfig::omega0)
        .def_readonly("phi_plus", &ScenarioConfig::phi_plus)
        .def_readonly("phi_minus", &ScenarioConfig::phi_minus)
        .def_readonly("n", &ScenarioConfig::n)
        .def_readonly("n_bar", &ScenarioConfig::n_bar);
    m.def("make_scenario", &make_scenario, py::arg("alpha"), py::arg("omega0"));

    py::class_<Profile>(m, "Profile")
        .def_static("heaviside", &Profile::heaviside)
        .def_static("smooth_ramp", &Profile::smooth_ramp, py::arg("lam"))
        .def_static("sampled", &Profile::sampled, py::arg("s"), py::arg("values"))
        .def("f", &Profile::f, py::arg("s"))
        .def("modulated", &Profile::modulated, py::arg("s"), py::arg("omega0"))
        .def("fhat", &Profile::fhat_closed_form, py::arg("omega"))
        .def("settle_horizon", &Profile::settle_horizon)
        .def("__repr__", &Profile::describe);

    m.def("fourier_laplace", &fourier_laplace, py::arg("profile"), py::arg("omega"),
          py::arg("t_max") = 50.0, py::arg("tol") = 1e-10);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](double rel, double abs, int max_subdiv, double r) {
                 QuadratureSpec s;
                 s.rel_tol = rel;
                 s.abs_tol = abs;
                 s.max_subdivisions = max_subdiv;
                 s.deformation_radius = r;
                 return s;
             }),
             py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14,
             py::arg("max_subdivisions") = 20000,
             py::arg("deformation_radius") = 0.0)
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("deformation_radius", &QuadratureSpec::deformation_radius);

    // kernels
    m.def("eval_U", &eval_U, py::arg("zeta"), py::arg("alpha"));
    m.def("eval_Z", &eval_Z, py::arg("z"), py::arg("alpha"));
    m.def("eval_calZ", &eval_calZ, py::arg("beta"), py::arg("phi"), py::arg("scenario"));
    m.def("eval_dphi_calZ", &eval_dphi_calZ, py::arg("beta"), py::arg("phi"),
          py::arg("scenario"));
    m.def("sommerfeld_kernel", &eval_sommerfeld_kernel, py::arg("gamma"),
          py::arg("phi"), py::arg("alpha"));
    py::class_<KernelDecomposition>(m, "KernelDecomposition")
        .def_readonly("eps_plus", &KernelDecomposition::eps_plus)
        .def_readonly("eps_minus", &KernelDecomposition::eps_minus)
        .def_readonly("singular_coeff_plus", &KernelDecomposition::singular_coeff_plus)
        .def_readonly("singular_coeff_minus", &KernelDecomposition::singular_coeff_minus)
        .def("singular_part", &KernelDecomposition::singular_part, py::arg("beta"))
        .def("remainder", &KernelDecomposition::remainder, py::arg("beta"))
        .def("reconstruct", &KernelDecomposition::reconstruct, py::arg("beta"));
    m.def("decompose_calZ", &decompose_calZ, py::arg("phi"), py::arg("scenario"));

    m.def(
        "integrate_K",
        [](const std::string& kind, double rho, cplx omega, double eps,
           const QuadratureSpec& spec) {
            KKind k = kind == "K0"   ? KKind::K0
                      : kind == "K1" ? KKind::K1
                      : kind == "K2" ? KKind::K2
                                     : throw UsageError("kind must be K0|K1|K2");
            return integrate_K(k, rho, omega, eps, spec);
        },
        py::arg("kind"), py::arg("rho"), py::arg("omega"), py::arg("eps"),
        py::arg("spec") = QuadratureSpec{});

    // time-domain fields
    auto td = [](auto&& fn) { return fn; };
    m.def("incident",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t) { return incident(sc, p, as_point(rho, phi), t); }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"));
    m.def("incident0",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t) { return incident0(sc, p, as_point(rho, phi), t); }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"));
    m.def("incident1",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t) { return incident1(sc, p, as_point(rho, phi), t); }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"));
    m.def("reflected",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t) { return reflected(sc, p, as_point(rho, phi), t); }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"));
    m.def("diffracted",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t, const QuadratureSpec& spec) {
              return diffracted(sc, p, as_point(rho, phi), t, spec);
          }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"), py::arg("spec") = QuadratureSpec{});
    m.def("total",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t, const QuadratureSpec& spec) {
              return total(sc, p, as_point(rho, phi), t, spec);
          }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"), py::arg("spec") = QuadratureSpec{});
    m.def("scattered",
          td([](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
                double t, const QuadratureSpec& spec) {
              return scattered(sc, p, as_point(rho, phi), t, spec);
          }),
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("t"), py::arg("spec") = QuadratureSpec{});

    // frequency-domain fields
    m.def("hat_incident",
          [](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
             cplx w) { return hat_incident(sc, p, as_point(rho, phi), w); },
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("omega"));
    m.def("hat_reflected",
          [](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
             cplx w) { return hat_reflected(sc, p, as_point(rho, phi), w); },
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("omega"));
    m.def("hat_diffracted",
          [](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
             cplx w, const QuadratureSpec& spec) {
              return hat_diffracted(sc, p, as_point(rho, phi), w, spec);
          },
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("omega"), py::arg("spec") = QuadratureSpec{});
    m.def("hat_scattered",
          [](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
             cplx w, const QuadratureSpec& spec) {
              return hat_scattered(sc, p, as_point(rho, phi), w, spec);
          },
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("omega"), py::arg("spec") = QuadratureSpec{});
    m.def("jump",
          [](const ScenarioConfig& sc, const Profile& p, const std::string& comp,
             int dphi_order, double rho, cplx w, const std::string& at,
             const QuadratureSpec& spec) {
              JumpRay ray = at == "phi_plus"    ? JumpRay::phi_plus
                            : at == "phi_minus" ? JumpRay::phi_minus
                                                : throw UsageError(
                                                      "at must be phi_minus|phi_plus");
              std::vector<double> deltas;
              for (int k = 0; k <= 6; ++k) deltas.push_back(0.02 / (1 << k));
              auto est = jump(sc, p, component_from(comp), dphi_order, rho, w, ray,
                              deltas, spec);
              return py::make_tuple(est.jump, est.error);
          },
          py::arg("scenario"), py::arg("profile"), py::arg("component"),
          py::arg("dphi_order"), py::arg("rho"), py::arg("omega"), py::arg("at"),
          py::arg("spec") = QuadratureSpec{});

    // stationary amplitudes
    m.def("fresnel_F", &fresnel_F, py::arg("a"));
    m.def("amplitude_incident",
          [](const ScenarioConfig& sc, double rho, double phi) {
              return amplitude_incident(sc, as_point(rho, phi));
          },
          py::arg("scenario"), py::arg("rho"), py::arg("phi"));
    m.def("amplitude_diffracted",
          [](const ScenarioConfig& sc, double rho, double phi,
             const QuadratureSpec& spec) {
              return amplitude_diffracted(sc, as_point(rho, phi), spec);
          },
          py::arg("scenario"), py::arg("rho"), py::arg("phi"),
          py::arg("spec") = QuadratureSpec{});
    m.def("amplitude_total",
          [](const ScenarioConfig& sc, double rho, double phi, const std::string& r,
             const QuadratureSpec& spec) {
              return amplitude_total(sc, as_point(rho, phi), route_from(r), spec);
          },
          py::arg("scenario"), py::arg("rho"), py::arg("phi"),
          py::arg("route") = "kernel", py::arg("spec") = QuadratureSpec{});
    m.def("amplitude_scattered",
          [](const ScenarioConfig& sc, double rho, double phi, const std::string& r,
             const QuadratureSpec& spec) {
              return amplitude_scattered(sc, as_point(rho, phi), spec, route_from(r));
          },
          py::arg("scenario"), py::arg("rho"), py::arg("phi"),
          py::arg("route") = "kernel", py::arg("spec") = QuadratureSpec{});

    m.def("lap_study",
          [](const ScenarioConfig& sc, const Profile& p, double rho, double phi,
             const std::vector<double>& times, const QuadratureSpec& spec) {
              LapReport r = lap_study(sc, p, as_point(rho, phi), times, spec);
              py::dict d;
              d["times"] = r.times;
              d["errors_total"] = r.errors_total;
              d["errors_scattered"] = r.errors_scattered;
              d["errors_diffracted"] = r.errors_diffracted;
              d["fitted_rate"] = r.fitted_rate;
              d["amplitude_total"] = r.amplitude_total_ref;
              d["amplitude_scattered"] = r.amplitude_scattered_ref;
              return d;
          },
          py::arg("scenario"), py::arg("profile"), py::arg("rho"), py::arg("phi"),
          py::arg("times"), py::arg("spec") = QuadratureSpec{});

    m.def("suite_ids", [] { return suite_ids(); });
    m.def("run_suite",
          [](const std::string& id, const ScenarioConfig& sc, const Profile& p,
             const QuadratureSpec& spec, double tol_scale) {
              py::list out;
              for (const auto& r : run_suite(id, sc, p, spec, tol_scale))
                  out.append(report_to_dict(r));
              return out;
          },
          py::arg("suite_id"), py::arg("scenario"), py::arg("profile"),
          py::arg("spec") = QuadratureSpec{}, py::arg("tol_scale") = 1.0);
}
