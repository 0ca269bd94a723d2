// Python bindings. Structured values cross the boundary as JSON text; the
// Python package decodes them, so rationals stay exact strings on both sides.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tpw/json_io.hpp"
#include "tpw/suites.hpp"

namespace py = pybind11;
using namespace tpw;

namespace {

QMat parse_matrix(const std::string& text) { return json::parse(text).get<QMat>(); }

}  // namespace

PYBIND11_MODULE(_tpw, m) {
  m.doc() = "exact computations in the totally nonnegative monoid of GL_n";

  py::register_exception<Error>(m, "TpwError", PyExc_ValueError);

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : suite_catalog()) out.push_back(s.name);
    return out;
  });
  m.def(
      "run_suite",
      [](const std::string& name, int n, std::uint64_t seed, int trials, int workers, double tol) {
        SuiteConfig cfg{n, seed, trials, workers, static_cast<long double>(tol)};
        json rep;
        {
          py::gil_scoped_release release;
          rep = run_suite(name, cfg);
        }
        return dump_line(rep);
      },
      py::arg("name"), py::arg("n") = 0, py::arg("seed") = 1, py::arg("trials") = -1, py::arg("workers") = 1,
      py::arg("tol") = 1e-12);
  m.def(
      "sample",
      [](int n, std::uint64_t seed, int trial) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
        CellPoint p = random_cellpoint(n, rng);
        return dump_line(json{{"cell", p}, {"matrix", realize(p)}});
      },
      py::arg("n"), py::arg("seed") = 1, py::arg("trial") = 0);
  m.def("realize", [](const std::string& cell) { return dump_line(realize(json::parse(cell).get<CellPoint>())); });
  m.def("factor_cell", [](const std::string& matrix) { return dump_line(factor_cell(parse_matrix(matrix))); });
  m.def("classify", [](const std::string& matrix) { return dump_line(classify(parse_matrix(matrix))); });
  m.def("check_conjecture", [](const std::string& matrix) { return dump_line(check_conjecture(parse_matrix(matrix))); });
  m.def(
      "t_gt1_witness",
      [](const std::vector<std::string>& spectrum, double tol) {
        TorusElt t;
        for (const auto& s : spectrum) t.push_back(parse_rat(s));
        return dump_line(t_gt1_witness(t, static_cast<long double>(tol)));
      },
      py::arg("spectrum"), py::arg("tol") = 1e-12);
}
