#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hartmann/fdsolver.hpp"
#include "hartmann/model.hpp"
#include "hartmann/susy.hpp"
#include "hartmann/validation.hpp"

namespace py = pybind11;
using namespace hartmann;

PYBIND11_MODULE(_core, m) {
  m.doc() = "SUSY factorization solver for the ring-shaped Hartmann potential";

  py::class_<QuasiPoly>(m, "QuasiPoly")
      .def(py::init<>())
      .def(py::init<double, double, std::map<int, double>>(), py::arg("alpha"),
           py::arg("kappa"), py::arg("coeffs"))
      .def_property_readonly("alpha", &QuasiPoly::alpha)
      .def_property_readonly("kappa", &QuasiPoly::kappa)
      .def_property_readonly("coeffs", &QuasiPoly::coeffs)
      .def("is_zero", &QuasiPoly::is_zero)
      .def("evaluate", &QuasiPoly::evaluate, py::arg("r"))
      .def("derivative", &QuasiPoly::derivative)
      .def("shifted_power", &QuasiPoly::shifted_power, py::arg("p"))
      .def("scaled", &QuasiPoly::scaled, py::arg("c"))
      .def("__add__", [](const QuasiPoly& a, const QuasiPoly& b) { return a + b; })
      .def("__sub__", [](const QuasiPoly& a, const QuasiPoly& b) { return a - b; });

  m.def("inner_product", &inner_product, py::arg("f"), py::arg("g"));
  m.def("gamma_real", &gamma_real, py::arg("x"));
  m.def("apply_radial_hamiltonian", &apply_radial_hamiltonian, py::arg("f"),
        py::arg("L"), py::arg("gamma"));

  m.def("ground_state_u", &ground_state_u, py::arg("L"), py::arg("gamma"));
  m.def("build_u", &build_u, py::arg("N"), py::arg("L"), py::arg("gamma"));
  m.def("radial_R", &radial_R, py::arg("u"));
  m.def("energy_internal", &energy_internal, py::arg("N"), py::arg("gamma"));
  m.def("annihilation_residual", &annihilation_residual, py::arg("L"),
        py::arg("gamma"));
  m.def("factorization_residual", &factorization_residual, py::arg("f"),
        py::arg("L"), py::arg("gamma"));

  py::class_<QuantumNumbers>(m, "QuantumNumbers")
      .def_readonly("m", &QuantumNumbers::m)
      .def_readonly("nu_prime", &QuantumNumbers::nu_prime)
      .def_readonly("n_prime", &QuantumNumbers::n_prime)
      .def_readonly("M_abs", &QuantumNumbers::M_abs)
      .def_readonly("L", &QuantumNumbers::L)
      .def_readonly("N", &QuantumNumbers::N);

  py::class_<HartmannParams>(m, "HartmannParams")
      .def(py::init<double, double>(), py::arg("eta"), py::arg("sigma"))
      .def_readonly("eta", &HartmannParams::eta)
      .def_readonly("sigma", &HartmannParams::sigma)
      .def("gamma", &HartmannParams::gamma);

  py::class_<UnitSystem>(m, "UnitSystem")
      .def(py::init<>())
      .def_readwrite("mu", &UnitSystem::mu)
      .def_readwrite("e_sq", &UnitSystem::e_sq)
      .def_readwrite("hbar", &UnitSystem::hbar)
      .def("a0", &UnitSystem::a0)
      .def("eps0", &UnitSystem::eps0);

  py::class_<SpectrumEntry>(m, "SpectrumEntry")
      .def_readonly("qn", &SpectrumEntry::qn)
      .def_readonly("energy_internal", &SpectrumEntry::energy_internal)
      .def_readonly("energy_physical", &SpectrumEntry::energy_physical)
      .def_readonly("energy_over_eps0", &SpectrumEntry::energy_over_eps0);

  m.def("derive_quantum_numbers", &derive_quantum_numbers, py::arg("params"),
        py::arg("m"), py::arg("nu_prime"), py::arg("n_prime"));
  m.def("potential_value", &potential_value, py::arg("params"),
        py::arg("units"), py::arg("r"), py::arg("theta"));
  m.def("spectrum", &spectrum, py::arg("params"), py::arg("units"),
        py::arg("m_min"), py::arg("m_max"), py::arg("max_excitation"));
  m.def("degeneracy_at_level", &degeneracy_at_level, py::arg("params"),
        py::arg("m"), py::arg("N"));
  m.def("radial_wavefunction", &radial_wavefunction, py::arg("params"),
        py::arg("units"), py::arg("qn"));

  py::class_<RadialGrid>(m, "RadialGrid")
      .def(py::init<double, int>(), py::arg("r_max"), py::arg("n"))
      .def_readonly("r_max", &RadialGrid::r_max)
      .def_readonly("n", &RadialGrid::n)
      .def("h", &RadialGrid::h)
      .def("node", &RadialGrid::node);

  py::class_<TridiagonalOperator>(m, "TridiagonalOperator")
      .def_readonly("diag", &TridiagonalOperator::diag)
      .def_readonly("offdiag", &TridiagonalOperator::offdiag);

  m.def("discretize", &discretize, py::arg("L"), py::arg("gamma"),
        py::arg("grid"));
  m.def("sturm_count", &sturm_count, py::arg("T"), py::arg("lam"));
  m.def("lowest_eigenvalues", &lowest_eigenvalues, py::arg("T"), py::arg("k"),
        py::arg("tol"));
  m.def("eigenvector", &eigenvector, py::arg("T"), py::arg("lam"));
  m.def("integrate_ground_state_ode", &integrate_ground_state_ode,
        py::arg("L"), py::arg("gamma"), py::arg("grid"));

  py::class_<ValidationCheck>(m, "ValidationCheck")
      .def_readonly("name", &ValidationCheck::name)
      .def_readonly("residual", &ValidationCheck::residual)
      .def_readonly("tolerance", &ValidationCheck::tolerance)
      .def_readonly("pass_", &ValidationCheck::pass);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("checks", &ValidationReport::checks)
      .def_readonly("pass_", &ValidationReport::pass);

  m.def(
      "run_validation",
      [](double eta, double sigma, int m_, int max_n, int grid_n, double r_max,
         const std::string& suite, bool inject_error) {
        ValidationOptions opts;
        opts.eta = eta;
        opts.sigma = sigma;
        opts.m = m_;
        opts.max_n = max_n;
        opts.grid_n = grid_n;
        opts.r_max = r_max;
        opts.inject_error = inject_error;
        opts.suite = suite == "algebra"   ? ValidationSuite::algebra
                     : suite == "numeric" ? ValidationSuite::numeric
                                          : ValidationSuite::all;
        return run_validation(opts);
      },
      py::arg("eta") = 1.0, py::arg("sigma") = 1.0, py::arg("m") = 0,
      py::arg("max_n") = 4, py::arg("grid_n") = 6000, py::arg("r_max") = 0.0,
      py::arg("suite") = "all", py::arg("inject_error") = false);

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidQuantumNumbers>(m, "InvalidQuantumNumbersError",
                                                PyExc_ValueError);
}
