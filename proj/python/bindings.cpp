#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mie/core.hpp"
#include "mie/oracle.hpp"
#include "mie/spectrum.hpp"
#include "mie/validation.hpp"
#include "mie/version.hpp"
#include "mie/wavefunction.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "bound states of the Coulomb + inverse-square potential in N dimensions";
  m.attr("__version__") = mie::version;

  py::class_<mie::DimensionlessModel>(m, "DimensionlessModel")
      .def_static("special", &mie::DimensionlessModel::special, py::arg("gamma_sq"),
                  py::arg("dim_N") = 3)
      .def_static("generalized", &mie::DimensionlessModel::generalized, py::arg("a1"),
                  py::arg("a2"), py::arg("dim_N") = 3)
      .def_readonly("gamma_sq", &mie::DimensionlessModel::gamma_sq)
      .def_readonly("dim_N", &mie::DimensionlessModel::dim_N)
      .def_readonly("a1", &mie::DimensionlessModel::a1_coeff)
      .def_readonly("a2", &mie::DimensionlessModel::a2_coeff);

  py::class_<mie::QuantumState>(m, "QuantumState")
      .def(py::init([](int n, int l, int dim_N) {
             mie::QuantumState s{n, l, dim_N};
             s.validate();
             return s;
           }),
           py::arg("n"), py::arg("l"), py::arg("dim_N") = 3)
      .def_readonly("n", &mie::QuantumState::n)
      .def_readonly("l", &mie::QuantumState::l)
      .def_readonly("dim_N", &mie::QuantumState::dim_N);

  py::class_<mie::BoundLevel>(m, "BoundLevel")
      .def_readonly("q_exponent", &mie::BoundLevel::q_exponent)
      .def_readonly("beta", &mie::BoundLevel::beta)
      .def_readonly("energy_dimensionless", &mie::BoundLevel::energy_dimensionless);

  m.def(
      "bound_energy",
      [](const mie::DimensionlessModel& model, const mie::QuantumState& state) {
        return mie::bound_energy(model, state);
      },
      py::arg("model"), py::arg("state"));

  m.def("angular_index", &mie::angular_index, py::arg("l"), py::arg("dim_N"));
  m.def("coulomb_check", &mie::coulomb_check, py::arg("n_principal"));

  m.def(
      "expansion_terms",
      [](const mie::DimensionlessModel& model, const mie::QuantumState& state) {
        const mie::ExpansionTerms t = mie::expand_energy(model, state, 3);
        return std::vector<double>(t.terms.begin(), t.terms.end());
      },
      py::arg("model"), py::arg("state"),
      "five E/D0 expansion terms in powers of 1/gamma");

  py::class_<mie::RadialFunction>(m, "RadialFunction")
      .def("__call__", &mie::RadialFunction::operator(), py::arg("x"))
      .def_property_readonly("beta",
                             [](const mie::RadialFunction& rf) { return rf.level.beta; })
      .def_property_readonly(
          "q", [](const mie::RadialFunction& rf) { return rf.level.q_exponent; })
      .def_property_readonly(
          "energy",
          [](const mie::RadialFunction& rf) { return rf.level.energy_dimensionless; })
      .def_readonly("norm_constant", &mie::RadialFunction::norm_constant);

  m.def("radial_bound", &mie::radial_bound, py::arg("model"), py::arg("state"),
        py::arg("r0") = 1.0);
  m.def("normalization", &mie::normalization, py::arg("model"), py::arg("state"),
        py::arg("r0") = 1.0);
  m.def("normalization_alt", &mie::normalization_alt, py::arg("model"),
        py::arg("state"), py::arg("r0") = 1.0);
  m.def("norm_integral", &mie::norm_integral, py::arg("model"), py::arg("state"));
  m.def("count_nodes", &mie::count_nodes, py::arg("model"), py::arg("state"));

  m.def(
      "oracle_levels",
      [](const mie::DimensionlessModel& model, int l, int count) {
        const mie::Grid grid = mie::default_grid(model, l, count);
        const mie::OracleResult res = mie::richardson(model, l, grid, count);
        std::vector<double> out;
        out.reserve(res.richardson.size());
        for (const auto& r : res.richardson) out.push_back(r.value);
        return out;
      },
      py::arg("model"), py::arg("l"), py::arg("count"),
      "Richardson-extrapolated finite-difference eigenvalues (independent of "
      "the closed form)");

  m.def("ode_residual", &mie::ode_residual, py::arg("model"), py::arg("state"),
        py::arg("x_lo"), py::arg("x_hi"), py::arg("h"));
}
