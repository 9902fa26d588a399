#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir_landau/budget.hpp"
#include "casimir_landau/errors.hpp"
#include "casimir_landau/ladder.hpp"
#include "casimir_landau/params.hpp"
#include "casimir_landau/quadrature.hpp"
#include "casimir_landau/vacuum.hpp"

namespace py = pybind11;
using namespace casimir_landau;

namespace {

void bind_params(py::module_& m) {
  py::class_<PhysicalSetup>(m, "PhysicalSetup")
      .def(py::init([](double charge, double mass, double field, int level) {
             return PhysicalSetup{charge, mass, field, level};
           }),
           py::arg("charge") = -1.0, py::arg("mass") = 1.0,
           py::arg("field") = 1.0, py::arg("level") = 0)
      .def_readwrite("charge", &PhysicalSetup::charge)
      .def_readwrite("mass", &PhysicalSetup::mass)
      .def_readwrite("field", &PhysicalSetup::field)
      .def_readwrite("level", &PhysicalSetup::level);

  py::class_<DimensionlessPoint>(m, "DimensionlessPoint")
      .def_readonly("alpha", &DimensionlessPoint::alpha)
      .def_readonly("x", &DimensionlessPoint::x)
      .def_readonly("n", &DimensionlessPoint::n)
      .def_readonly("omega_c", &DimensionlessPoint::omega_c)
      .def_readonly("orientation", &DimensionlessPoint::orientation)
      .def_readonly("nonrelativistic_warning",
                    &DimensionlessPoint::nonrelativistic_warning)
      .def("__repr__", [](DimensionlessPoint const& p) {
        return "DimensionlessPoint(alpha=" + std::to_string(p.alpha) +
               ", x=" + py::repr(py::float_(p.x)).cast<std::string>() +
               ", n=" + std::to_string(p.n) + ")";
      });

  m.attr("fine_structure") = codata2018.fine_structure();
  m.attr("validity_threshold") = validity_threshold;

  m.def("reduce", [](PhysicalSetup const& s) { return reduce(s); }, py::arg("setup"));
  m.def(
      "electron",
      [](double field, int level) { return reduce({-1.0, 1.0, field, level}); },
      py::arg("field"), py::arg("level") = 0);
  m.def("make_point", &make_point, py::arg("alpha"), py::arg("x"), py::arg("n"));
  m.def("energy_level", py::overload_cast<int>(&energy_level), py::arg("n"));
}

void bind_budget(py::module_& m) {
  namespace b = budget;
  py::class_<b::AngularMomentumBudget>(m, "AngularMomentumBudget")
      .def_readonly("spin", &b::AngularMomentumBudget::spin)
      .def_readonly("transverse_total", &b::AngularMomentumBudget::transverse_total)
      .def_readonly("longitudinal", &b::AngularMomentumBudget::longitudinal)
      .def_readonly("lenz", &b::AngularMomentumBudget::lenz)
      .def_readonly("total_qv", &b::AngularMomentumBudget::total_qv)
      .def_readonly("kinetic_unperturbed", &b::AngularMomentumBudget::kinetic_unperturbed)
      .def_readonly("kinetic_corrected", &b::AngularMomentumBudget::kinetic_corrected)
      .def_readonly("magnetic_moment_ratio",
                    &b::AngularMomentumBudget::magnetic_moment_ratio);

  py::class_<b::RateLedger>(m, "RateLedger")
      .def_readonly("A_n", &b::RateLedger::A_n)
      .def_readonly("dS_dt", &b::RateLedger::dS_dt)
      .def_readonly("dJ_dt", &b::RateLedger::dJ_dt)
      .def_readonly("dLenz_dt", &b::RateLedger::dLenz_dt)
      .def_readonly("dJqv_dt", &b::RateLedger::dJqv_dt)
      .def_readonly("dlK_dt", &b::RateLedger::dlK_dt)
      .def("conservation_sum", &b::RateLedger::conservation_sum);

  m.def("lamb_shift", &b::lamb_shift);
  m.def("decay_rate", &b::decay_rate);
  m.def("spin_closed", &b::spin_closed);
  m.def("transverse_closed", &b::transverse_closed);
  m.def("longitudinal_closed", &b::longitudinal_closed);
  m.def("lenz_closed", &b::lenz_closed);
  m.def("total_qv", &b::total_qv);
  m.def("kinetic_corrected", &b::kinetic_corrected);
  m.def("magnetic_moment", &b::magnetic_moment);
  m.def("crossover_level", &b::crossover_level);
  m.def("rate_ledger", &b::rate_ledger);
  m.def("assemble", &b::assemble);
  m.def("channel_sum", &b::channel_sum);
}

void bind_vacuum(py::module_& m) {
  namespace v = vacuum;
  py::class_<v::ModeIntegral>(m, "ModeIntegral")
      .def_property_readonly("kind",
                             [](v::ModeIntegral const& r) {
                               return std::string(v::to_string(r.kind));
                             })
      .def_readonly("x", &v::ModeIntegral::x)
      .def_readonly("n", &v::ModeIntegral::n)
      .def_readonly("value", &v::ModeIntegral::value)
      .def_readonly("error_estimate", &v::ModeIntegral::error_estimate)
      .def_readonly("evaluations", &v::ModeIntegral::evaluations)
      .def_readonly("converged", &v::ModeIntegral::converged)
      .def_readonly("divergent", &v::ModeIntegral::divergent);

  py::class_<v::LogFit>(m, "LogFit")
      .def_readonly("slope", &v::LogFit::slope)
      .def_readonly("intercept", &v::LogFit::intercept)
      .def_readonly("constant", &v::LogFit::constant)
      .def_readonly("max_residual", &v::LogFit::max_residual);

  double const tol = quadrature::acceptance_rel_tol;
  m.def("spin_integral", &v::spin_integral, py::arg("x"), py::arg("rel_tol") = tol);
  m.def("recoil_orbital_integral", &v::recoil_orbital_integral,
        py::arg("rel_tol") = tol, py::arg("recoil_coefficient") = 0.5);
  m.def("longitudinal_value", &v::longitudinal_value, py::arg("n"), py::arg("x"),
        py::arg("rel_tol") = tol);
  m.def("longitudinal_raw", &v::longitudinal_raw, py::arg("n"), py::arg("x"),
        py::arg("probe_decades") = 5);
  m.def(
      "fit_log_asymptote",
      [](std::vector<double> const& xs, std::vector<double> const& values) {
        return v::fit_log_asymptote(xs, values);
      },
      py::arg("xs"), py::arg("values"));
  m.attr("spin_prefactor_ratio") = v::spin_prefactor_ratio;
}

void bind_ladder(py::module_& m) {
  namespace l = ladder;
  auto sub = m.def_submodule("ladder", "Truncated ladder-operator oracles");
  sub.def(
      "eps_identity_residual",
      [](std::function<double(double)> const& f, int n, int dim) {
        return l::verify_eps_identity(f, n, dim < 0 ? l::default_dim(n) : dim);
      },
      py::arg("f"), py::arg("n"), py::arg("dim") = -1);
  sub.def("dipole_identity_residual", &l::dipole_identity_check, py::arg("n"),
          py::arg("n_prime"), py::arg("dim"));
  sub.def(
      "resolvent_sequence",
      [](int n, double energy, std::string const& pattern) {
        return l::resolvent_sequence(n, energy, l::parse_pattern(pattern));
      },
      py::arg("n"), py::arg("energy"), py::arg("pattern"));
  sub.def("orbital_transition_weight",
          py::overload_cast<int, int>(&l::orbital_transition_weight),
          py::arg("n"), py::arg("n_prime"));
  sub.def(
      "lenz_diagonal",
      [](int n, int m_b, int dim) {
        return l::lenz_operator(dim, dim).expectation(n, m_b).real();
      },
      py::arg("n"), py::arg("m_b"), py::arg("dim") = 10);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vacuum angular momentum of a charge in a Landau level";
  m.attr("__version__") = "0.1.0";

  auto numerical = py::register_exception<NumericalError>(m, "NumericalError",
                                                          PyExc_ArithmeticError);
  py::register_exception<SingularResolvent>(m, "SingularResolvent", numerical.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_ValueError);

  bind_params(m);
  bind_budget(m);
  bind_vacuum(m);
  bind_ladder(m);
}
