#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scatterbound/bounds.hpp"
#include "scatterbound/config.hpp"
#include "scatterbound/perturbation.hpp"
#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"
#include "scatterbound/sweep.hpp"
#include "scatterbound/verify.hpp"

namespace py = pybind11;
using namespace scatterbound;

namespace {

py::dict trajectory_arrays(const AbSolution& s) {
  const auto n = static_cast<py::ssize_t>(s.trajectory.size());
  py::array_t<double> x(n);
  py::array_t<complex> a(n), b(n);
  auto xv = x.mutable_unchecked<1>();
  auto av = a.mutable_unchecked<1>();
  auto bv = b.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < n; ++i) {
    xv(i) = s.trajectory[i].x;
    av(i) = s.trajectory[i].a;
    bv(i) = s.trajectory[i].b;
  }
  py::dict out;
  out["x"] = x;
  out["a"] = a;
  out["b"] = b;
  out["a_inf"] = s.final_state.a;
  out["b_inf"] = s.final_state.b;
  return out;
}

}  // namespace

PYBIND11_MODULE(_scatterbound, m) {
  m.doc() = "Exact 1D scattering, Bogoliubov-coefficient bounds and distorted-Born estimates";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", domain_error.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<PotentialSpec>(m, "PotentialSpec")
      .def_static("free", &PotentialSpec::free, py::arg("level") = 0.0)
      .def_static("step", &PotentialSpec::step, py::arg("v_minus"), py::arg("v_plus"),
                  py::arg("center") = 0.0)
      .def_static("square_barrier", &PotentialSpec::square_barrier, py::arg("height"),
                  py::arg("width"), py::arg("center") = 0.0)
      .def_static("delta", &PotentialSpec::delta, py::arg("strength"), py::arg("center") = 0.0)
      .def_static("gaussian", &PotentialSpec::gaussian, py::arg("height"), py::arg("sigma"),
                  py::arg("center") = 0.0)
      .def_static("tabulated", &PotentialSpec::tabulated, py::arg("x"), py::arg("v"),
                  py::arg("v_minus"), py::arg("v_plus"))
      .def_static("shifted", &PotentialSpec::shifted, py::arg("base"), py::arg("shift"),
                  py::arg("epsilon"))
      .def_property_readonly("kind", [](const PotentialSpec& s) { return to_string(s.kind()); })
      .def_property_readonly("v_minus_inf", &PotentialSpec::v_minus_inf)
      .def_property_readonly("v_plus_inf", &PotentialSpec::v_plus_inf)
      .def("__call__", [](const PotentialSpec& s, double x) { return evaluate_potential(s, x); })
      .def("to_json", [](const PotentialSpec& s) { return serialize_potential(s); })
      .def(py::self == py::self);

  py::class_<SolverSettings>(m, "SolverSettings")
      .def(py::init<>())
      .def_readwrite("rel_tol", &SolverSettings::rel_tol)
      .def_readwrite("abs_tol", &SolverSettings::abs_tol)
      .def_readwrite("asymptote_tol", &SolverSettings::asymptote_tol)
      .def_readwrite("domain_pad", &SolverSettings::domain_pad)
      .def_readwrite("max_steps", &SolverSettings::max_steps)
      .def_readwrite("node_spacing", &SolverSettings::node_spacing);

  py::class_<ScatterResult>(m, "ScatterResult")
      .def_readonly("alpha", &ScatterResult::alpha)
      .def_readonly("beta", &ScatterResult::beta)
      .def_readonly("T", &ScatterResult::T)
      .def_readonly("R", &ScatterResult::R);

  py::class_<ComparisonSolution>(m, "ComparisonSolution")
      .def(py::init<const PotentialSpec&, double>(), py::arg("spec"), py::arg("energy"))
      .def("psi0", &ComparisonSolution::psi0)
      .def("dpsi0", &ComparisonSolution::dpsi0)
      .def_property_readonly("alpha0", &ComparisonSolution::alpha0)
      .def_property_readonly("beta0", &ComparisonSolution::beta0)
      .def_property_readonly("T0", &ComparisonSolution::T0)
      .def_property_readonly("energy", &ComparisonSolution::energy)
      .def_property_readonly("spec", &ComparisonSolution::spec);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("theta_bound", &BoundReport::theta_bound)
      .def_readonly("theta0", &BoundReport::theta0)
      .def_readonly("alpha_upper", &BoundReport::alpha_upper)
      .def_readonly("beta_upper", &BoundReport::beta_upper)
      .def_readonly("alpha_lower", &BoundReport::alpha_lower)
      .def_readonly("beta_lower", &BoundReport::beta_lower)
      .def_readonly("T_lower", &BoundReport::T_lower)
      .def_readonly("T_upper", &BoundReport::T_upper)
      .def_readonly("upper_valid", &BoundReport::upper_valid)
      .def_readonly("lower_nontrivial", &BoundReport::lower_nontrivial);

  py::class_<PerturbationResult>(m, "PerturbationResult")
      .def_readonly("epsilon", &PerturbationResult::epsilon)
      .def_readonly("b_tilde", &PerturbationResult::b_tilde)
      .def_readonly("b_infinity_est", &PerturbationResult::b_infinity_est)
      .def_readonly("b_abs_bound", &PerturbationResult::b_abs_bound)
      .def_readonly("delta_T_est", &PerturbationResult::delta_T_est)
      .def_readonly("delta_T_bound", &PerturbationResult::delta_T_bound)
      .def_readonly("delta_N_bound", &PerturbationResult::delta_N_bound);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("E", &SweepRow::E)
      .def_readonly("T_exact", &SweepRow::T_exact)
      .def_readonly("T0", &SweepRow::T0)
      .def_readonly("theta_bound", &SweepRow::theta_bound)
      .def_readonly("T_lower", &SweepRow::T_lower)
      .def_readonly("T_upper", &SweepRow::T_upper)
      .def_readonly("upper_valid", &SweepRow::upper_valid)
      .def_readonly("alpha_abs", &SweepRow::alpha_abs)
      .def_readonly("beta_abs", &SweepRow::beta_abs)
      .def_readonly("alpha_upper", &SweepRow::alpha_upper)
      .def_readonly("alpha_lower", &SweepRow::alpha_lower)
      .def_readonly("sandwich_ok", &SweepRow::sandwich_ok)
      .def_readonly("status", &SweepRow::status);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def_property_readonly("potential", [](const ScenarioConfig& c) { return c.potential; })
      .def_property_readonly("comparison", [](const ScenarioConfig& c) { return c.comparison; })
      .def("energies", &ScenarioConfig::energies)
      .def("to_json", [](const ScenarioConfig& c) { return serialize_config(c); });

  m.def("solve_direct", &solve_direct, py::arg("spec"), py::arg("energy"),
        py::arg("settings") = SolverSettings{});
  m.def(
      "solve_ab_system",
      [](const PotentialSpec& spec, const ComparisonSolution& c, const SolverSettings& s) {
        return trajectory_arrays(solve_ab_system(spec, c, s));
      },
      py::arg("spec"), py::arg("comparison"), py::arg("settings") = SolverSettings{},
      "Trajectory as numpy arrays x, a, b plus the final a_inf, b_inf.");
  m.def(
      "compose_bogoliubov",
      [](const ComparisonSolution& c, complex a, complex b) {
        return compose_bogoliubov(c, AmplitudeState{0.0, a, b});
      },
      py::arg("comparison"), py::arg("a"), py::arg("b"));
  m.def("theta_bound", &theta_bound, py::arg("spec"), py::arg("comparison"), py::arg("energy"),
        py::arg("quad_tol") = 1e-10, py::arg("settings") = SolverSettings{});
  m.def("bogoliubov_bounds", &bogoliubov_bounds, py::arg("theta_bound"), py::arg("comparison"));
  m.def(
      "transmission_bounds_algebraic",
      [](double tb, double T0) {
        const auto r = transmission_bounds_algebraic(tb, T0);
        return py::make_tuple(r.T_lower, r.T_upper, r.upper_valid);
      },
      py::arg("theta_bound"), py::arg("T0"));
  m.def("case1_bound", &case1_bound, py::arg("spec"), py::arg("energy"),
        py::arg("quad_tol") = 1e-10, py::arg("settings") = SolverSettings{});
  m.def("first_order_estimates", &first_order_estimates, py::arg("comparison"), py::arg("delta_v"),
        py::arg("epsilon"), py::arg("quad_tol") = 1e-10, py::arg("settings") = SolverSettings{});
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("load_config", &load_config, py::arg("path"));
  m.def("run_sweep", &run_sweep, py::arg("config"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_verification",
      []() {
        std::ostringstream log;
        const auto results = run_verification(&log);
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      "Runs the built-in acceptance checks and returns one dict per check.");
}
