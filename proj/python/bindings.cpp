#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpwall/analysis.hpp"
#include "cpwall/errors.hpp"
#include "cpwall/oracle.hpp"
#include "cpwall/specfun.hpp"
#include "cpwall/thermal.hpp"
#include "cpwall/units.hpp"
#include "cpwall/vacuum.hpp"
#include "cpwall/verify.hpp"

namespace py = pybind11;
using namespace cpwall;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Casimir-Polder energy of a two-level atom near a perfect mirror";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidityError>(m, "ValidityError", domain.ptr());
  auto convergence = py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<NoBracketError>(m, "NoBracketError", convergence.ptr());

  py::class_<AtomParams>(m, "AtomParams")
      .def(py::init([](double k0, double alpha0) {
             AtomParams a{k0, alpha0};
             a.validate();
             return a;
           }),
           py::arg("k0") = 1.0, py::arg("alpha0") = 1.0)
      .def_readonly("k0", &AtomParams::k0)
      .def_readonly("alpha0", &AtomParams::alpha0)
      .def_property_readonly("lambda0", &AtomParams::lambda0);

  py::class_<ThermalEnvironment>(m, "ThermalEnvironment")
      .def_static("vacuum", &ThermalEnvironment::vacuum)
      .def_static("from_theta", &ThermalEnvironment::from_theta, py::arg("atom"), py::arg("theta"))
      .def_static("from_thermal_length", &ThermalEnvironment::from_thermal_length, py::arg("atom"),
                  py::arg("lambda_T"))
      .def_readonly("lambda_T", &ThermalEnvironment::lambda_T)
      .def_readonly("theta", &ThermalEnvironment::theta)
      .def_property_readonly("is_vacuum", &ThermalEnvironment::is_vacuum);

  py::class_<PotentialBreakdown>(m, "PotentialBreakdown")
      .def_readonly("vacuum", &PotentialBreakdown::vacuum)
      .def_readonly("thermal", &PotentialBreakdown::thermal)
      .def_readonly("total", &PotentialBreakdown::total)
      .def_readonly("notes", &PotentialBreakdown::notes);

  m.def("h0", &h0, py::arg("x0"));
  m.def("vacuum_potential", &vacuum_potential, py::arg("atom"), py::arg("z"));
  m.def("nonretarded_asymptote", &nonretarded_asymptote, py::arg("atom"), py::arg("z"));
  m.def("retarded_asymptote", &retarded_asymptote, py::arg("atom"), py::arg("z"));
  m.def("classify_regime", [](double x0) { return to_string(classify_regime(x0)); }, py::arg("x0"));

  m.def("thermal_potential_exact", &thermal_potential_exact, py::arg("atom"), py::arg("env"), py::arg("z"));
  m.def("thermal_contact_constant", &thermal_contact_constant, py::arg("atom"), py::arg("env"));
  m.def("thermal_short_leading", &thermal_short_leading, py::arg("atom"), py::arg("env"), py::arg("z"));
  m.def("thermal_short_expansion", &thermal_short_expansion, py::arg("atom"), py::arg("env"), py::arg("z"));
  m.def(
      "thermal_long_expansion",
      [](const AtomParams& a, const ThermalEnvironment& e, double z, bool as_printed) {
        return thermal_long_expansion(a, e, z, as_printed ? LongExpansionSign::as_printed : LongExpansionSign::corrected);
      },
      py::arg("atom"), py::arg("env"), py::arg("z"), py::arg("as_printed") = false);
  m.def("lifshitz_asymptote", &lifshitz_asymptote, py::arg("atom"), py::arg("env"), py::arg("z"));
  m.def("total_potential", &total_potential, py::arg("atom"), py::arg("env"), py::arg("z"));

  m.def(
      "vacuum_quadrature",
      [](const AtomParams& a, double z, const std::string& part) {
        oracle::VacuumPart p = oracle::VacuumPart::total;
        if (part == "rr") {
          p = oracle::VacuumPart::rr;
        } else if (part == "fr") {
          p = oracle::VacuumPart::fr;
        } else if (part != "total") {
          throw DomainError("part must be rr, fr or total");
        }
        const auto r = oracle::vacuum_split_quadrature(a, z, p);
        return py::make_tuple(r.value, r.abs_error_estimate);
      },
      py::arg("atom"), py::arg("z"), py::arg("part") = "total");
  m.def(
      "thermal_quadrature",
      [](const AtomParams& a, const ThermalEnvironment& e, double z, bool dispersion) {
        const auto r = oracle::thermal_quadrature(a, e, z, {dispersion});
        return py::make_tuple(r.value, r.abs_error_estimate);
      },
      py::arg("atom"), py::arg("env"), py::arg("z"), py::arg("dispersion") = true);

  m.def(
      "find_thermal_equilibrium",
      [](const AtomParams& a, const ThermalEnvironment& e, double lo, double hi) {
        const auto r = analysis::find_thermal_equilibrium(a, e, lo, hi);
        return py::make_tuple(r.z_star_over_lambdaT, r.curvature);
      },
      py::arg("atom"), py::arg("env"), py::arg("lo") = 0.3, py::arg("hi") = 0.7);
  m.def("dominance_crossover", &analysis::dominance_crossover, py::arg("atom"), py::arg("env"));
  m.def(
      "quadratic_fit",
      [](const AtomParams& a, const ThermalEnvironment& e, double lo, double hi, int points) {
        const auto f = analysis::quadratic_fit(a, e, lo, hi, points);
        py::dict d;
        d["a"] = f.a;
        d["b"] = f.b;
        d["c"] = f.c;
        d["vertex"] = f.vertex();
        d["rms_residual_relative"] = f.rms_residual_relative;
        return d;
      },
      py::arg("atom"), py::arg("env"), py::arg("lo"), py::arg("hi"), py::arg("points") = 41);

  m.def("thermal_length_um", [](double t) { return units::thermal_length_um(t, units::constants_from_environment()); },
        py::arg("temperature_kelvin"));

  m.def(
      "run_acceptance",
      [](bool quick) {
        py::list out;
        for (const auto& r : verify::run_acceptance(quick)) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["open_question"] = r.open_question;
          d["measured"] = r.measured;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("quick") = true);
}
