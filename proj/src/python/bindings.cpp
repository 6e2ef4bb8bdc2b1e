#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fermipair/fermi_gas.hpp"
#include "fermipair/measures.hpp"
#include "fermipair/spin_state.hpp"
#include "fermipair/thermal_shifts.hpp"
#include "fermipair/validate.hpp"
#include "fermipair/version.hpp"

namespace py = pybind11;
using namespace fermipair;

namespace {

SymMatrix4 matrix_from_array(const py::array_t<double>& array) {
  const auto buf = array.unchecked<2>();
  if (buf.shape(0) != 4 || buf.shape(1) != 4)
    throw py::value_error("expected a 4x4 matrix");
  SymMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = buf(i, j);
  if (m.max_asymmetry() > 1e-12)
    throw py::value_error("matrix is not symmetric");
  return m;
}

py::array_t<double> array_from_matrix(const SymMatrix4& m) {
  py::array_t<double> out({4, 4});
  auto buf = out.mutable_unchecked<2>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) buf(i, j) = m(i, j);
  return out;
}

Dimension dimension_from_int(int dim) {
  if (dim == 2) return Dimension::Two;
  if (dim == 3) return Dimension::Three;
  throw py::value_error("dim must be 2 or 3");
}

ShiftMethod method_from_string(const std::string& name) {
  if (name == "numeric") return ShiftMethod::numeric;
  if (name == "first_order") return ShiftMethod::first_order;
  throw py::value_error("method must be 'numeric' or 'first_order'");
}

ShiftQuantity quantity_from_string(const std::string& name) {
  if (name == "f") return ShiftQuantity::f;
  if (name == "c") return ShiftQuantity::c;
  if (name == "ere") return ShiftQuantity::ere;
  throw py::value_error("quantity must be 'f', 'c', or 'ere'");
}

const char* method_name(PairMethod method) {
  switch (method) {
    case PairMethod::analytic_T0: return "analytic_T0";
    case PairMethod::quadrature: return "quadrature";
    case PairMethod::sommerfeld_shifted: return "sommerfeld_shifted";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pair correlations and spin entanglement of the ideal Fermi gas";
  m.attr("__version__") = kVersion;

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def(py::init([](double abs_tol, double rel_tol, int max_depth) {
             return QuadratureSpec{abs_tol, rel_tol, max_depth};
           }),
           py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10,
           py::arg("max_depth") = 40)
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("max_depth", &QuadratureSpec::max_depth);

  py::class_<ThermalState>(m, "ThermalState")
      .def_readonly("t_rel", &ThermalState::t_rel)
      .def_readonly("mu_rel", &ThermalState::mu_rel)
      .def("__repr__", [](const ThermalState& ts) {
        return "ThermalState(t_rel=" + std::to_string(ts.t_rel) +
               ", mu_rel=" + std::to_string(ts.mu_rel) + ")";
      });

  py::class_<PairFunctionValue>(m, "PairFunctionValue")
      .def_readonly("x", &PairFunctionValue::x)
      .def_readonly("f", &PairFunctionValue::f)
      .def_property_readonly(
          "method",
          [](const PairFunctionValue& v) { return method_name(v.method); })
      .def("__repr__", [](const PairFunctionValue& v) {
        return "PairFunctionValue(x=" + std::to_string(v.x) +
               ", f=" + std::to_string(v.f) + ", method=" +
               method_name(v.method) + ")";
      });

  py::class_<WernerParams>(m, "WernerParams")
      .def_readonly("f2", &WernerParams::f2)
      .def_readonly("p", &WernerParams::p)
      .def_readonly("fidelity", &WernerParams::fidelity);

  py::class_<MeasureSet>(m, "MeasureSet")
      .def_readonly("f2", &MeasureSet::f2)
      .def_readonly("p", &MeasureSet::p)
      .def_readonly("fidelity", &MeasureSet::fidelity)
      .def_readonly("concurrence", &MeasureSet::concurrence)
      .def_readonly("eof", &MeasureSet::eof)
      .def_readonly("e_re", &MeasureSet::e_re)
      .def_readonly("mutual_info", &MeasureSet::mutual_info)
      .def_readonly("classical_corr", &MeasureSet::classical_corr)
      .def_readonly("g_parallel", &MeasureSet::g_parallel)
      .def_readonly("g_antiparallel", &MeasureSet::g_antiparallel)
      .def_readonly("entangled", &MeasureSet::entangled)
      .def_readonly("bell_violating", &MeasureSet::bell_violating)
      .def("as_dict", [](const MeasureSet& ms) {
        py::dict d;
        d["f2"] = ms.f2;
        d["p"] = ms.p;
        d["fidelity"] = ms.fidelity;
        d["concurrence"] = ms.concurrence;
        d["eof"] = ms.eof;
        d["e_re"] = ms.e_re;
        d["mutual_info"] = ms.mutual_info;
        d["classical_corr"] = ms.classical_corr;
        d["g_parallel"] = ms.g_parallel;
        d["g_antiparallel"] = ms.g_antiparallel;
        d["entangled"] = ms.entangled;
        d["bell_violating"] = ms.bell_violating;
        return d;
      });

  // numerics
  m.def("spherical_j1", &spherical_j1, py::arg("x"));
  m.def("bessel_j1", &bessel_j1, py::arg("x"));
  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def(
      "integrate",
      [](const std::function<double(double)>& f, double a, double b,
         const QuadratureSpec& spec) { return integrate(f, a, b, spec); },
      py::arg("f"), py::arg("a"), py::arg("b"),
      py::arg("spec") = QuadratureSpec{});
  m.def(
      "find_root",
      [](const std::function<double(double)>& f, double lo, double hi,
         double tol) { return find_root(f, lo, hi, tol); },
      py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-12);
  m.def(
      "eigen_sym4",
      [](const py::array_t<double>& matrix) {
        const EigenSym4 eig = eigen_sym4(matrix_from_array(matrix));
        return py::make_tuple(eig.values, array_from_matrix(eig.vectors));
      },
      py::arg("matrix"),
      "Eigenvalues (descending) and the orthonormal eigenvector columns");
  m.def(
      "psd_sqrt4",
      [](const py::array_t<double>& matrix) {
        return array_from_matrix(psd_sqrt4(matrix_from_array(matrix)));
      },
      py::arg("matrix"));

  // gas
  m.def("occupation", &occupation, py::arg("energy_rel"), py::arg("thermal"));
  m.def("solve_chemical_potential", &solve_chemical_potential,
        py::arg("t_rel"));
  m.def("normalization_residual", &normalization_residual, py::arg("thermal"));
  m.def(
      "f_zero_t",
      [](double x, int dim) { return f_zero_t(x, dimension_from_int(dim)); },
      py::arg("x"), py::arg("dim") = 3);
  m.def(
      "f_finite_t",
      [](double x, const ThermalState& thermal, const QuadratureSpec& spec) {
        return f_finite_t(x, thermal, spec);
      },
      py::arg("x"), py::arg("thermal"), py::arg("spec") = QuadratureSpec{});
  m.def("delta_f_sommerfeld", &delta_f_sommerfeld, py::arg("x"),
        py::arg("t_rel"));
  m.def("f_sommerfeld_shifted", &f_sommerfeld_shifted, py::arg("x"),
        py::arg("t_rel"));
  m.def("sum_rule_residual", &sum_rule_residual, py::arg("thermal"),
        py::arg("x_max"), py::arg("n_panels"));

  // spin state
  m.def("werner_from_f2", &werner_from_f2, py::arg("f2"));
  m.def(
      "density_matrix",
      [](double f2) {
        return array_from_matrix(density_matrix(werner_from_f2(f2)).m);
      },
      py::arg("f2"), "4x4 two-spin density matrix in the (uu, ud, du, dd) basis");
  m.def(
      "partial_transpose",
      [](const py::array_t<double>& rho) {
        return array_from_matrix(
            partial_transpose(TwoSpinDensityMatrix{matrix_from_array(rho)}));
      },
      py::arg("rho"));
  m.def(
      "is_entangled_ppt",
      [](const py::array_t<double>& rho) {
        return is_entangled_ppt(TwoSpinDensityMatrix{matrix_from_array(rho)});
      },
      py::arg("rho"));
  m.def(
      "wootters_concurrence",
      [](const py::array_t<double>& rho) {
        return wootters_concurrence(TwoSpinDensityMatrix{matrix_from_array(rho)});
      },
      py::arg("rho"));
  m.def(
      "von_neumann_entropy",
      [](const py::array_t<double>& rho) {
        return von_neumann_entropy(matrix_from_array(rho));
      },
      py::arg("rho"));

  // measures
  m.def("concurrence_closed", &concurrence_closed, py::arg("f2"));
  m.def("entanglement_of_formation", &entanglement_of_formation,
        py::arg("concurrence"));
  m.def("relative_entropy_entanglement", &relative_entropy_entanglement,
        py::arg("fidelity"));
  m.def("mutual_information", &mutual_information, py::arg("fidelity"));
  m.def("classical_correlation", &classical_correlation, py::arg("fidelity"));
  m.def("pair_distributions", &pair_distributions, py::arg("f2"));
  m.def(
      "classify",
      [](double f2) {
        const Classification c = classify(f2);
        return py::make_tuple(c.entangled, c.bell_violating);
      },
      py::arg("f2"));
  m.def("measure_set", &measure_set, py::arg("f2"));
  m.attr("BELL_THRESHOLD_F2") = kBellThresholdF2;

  // thermal shifts
  m.def("delta_f_numeric",
        py::overload_cast<double, double>(&delta_f_numeric), py::arg("x"),
        py::arg("t_rel"));
  m.def(
      "delta_concurrence",
      [](double x, double t_rel, const std::string& method) {
        return delta_concurrence(x, t_rel, method_from_string(method));
      },
      py::arg("x"), py::arg("t_rel"), py::arg("method") = "numeric");
  m.def("delta_relative_entropy",
        py::overload_cast<double, double>(&delta_relative_entropy),
        py::arg("x"), py::arg("t_rel"));
  m.def(
      "scaling_exponent",
      [](double x, const std::vector<double>& t_grid,
         const std::string& quantity) {
        return scaling_exponent(x, t_grid, quantity_from_string(quantity));
      },
      py::arg("x"), py::arg("t_grid"), py::arg("quantity"));
  m.def(
      "power_law_exponent",
      [](const std::vector<double>& t_grid, const std::vector<double>& deltas) {
        return power_law_exponent(t_grid, deltas);
      },
      py::arg("t_grid"), py::arg("deltas"));

  // validation
  m.def(
      "run_validation",
      [](bool quick) {
        py::list out;
        for (const CheckResult& check : run_validation(quick))
          out.append(py::make_tuple(check.name, check.passed, check.detail));
        return out;
      },
      py::arg("quick") = false);
}
