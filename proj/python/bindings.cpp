#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lbext/cli.hpp"
#include "lbext/corpus.hpp"
#include "lbext/io.hpp"

namespace py = pybind11;
using namespace lbext;

namespace {

std::string canonical_scalar(const std::string& text) { return Scalar::parse(text).str(); }

std::string scalar_binop(const std::string& a, const std::string& b, const std::string& op) {
  const Scalar x = Scalar::parse(a), y = Scalar::parse(b);
  if (op == "+") return (x + y).str();
  if (op == "-") return (x - y).str();
  if (op == "*") return (x * y).str();
  if (op == "/") return (x / y).str();
  throw py::value_error("unknown operator '" + op + "'");
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

std::vector<py::tuple> corpus() {
  std::vector<py::tuple> out;
  for (const auto& e : corpus_entries()) out.push_back(py::make_tuple(e.name, e.kind, e.description));
  return out;
}

std::string classify(const std::string& base, const std::vector<std::vector<std::string>>& samples) {
  const NamedBialgebra g = load_bialgebra(base);
  std::vector<Vector> vs;
  for (const auto& s : samples) {
    std::vector<Scalar> v;
    for (const auto& c : s) v.push_back(Scalar::parse(c));
    vs.push_back(make_vector(std::move(v)));
  }
  return classification_json(g.name, g.g, classify_codim1(g.g, vs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lie bialgebra extension toolkit";
  py::register_exception<Error>(m, "LbextError");

  m.def("canonical_scalar", &canonical_scalar, "Parse a scalar of Q(i) and print it canonically");
  m.def("scalar_binop", &scalar_binop, py::arg("a"), py::arg("b"), py::arg("op"));
  m.def("run_cli", &cli, "Run one command; returns (exit code, stdout, stderr)");
  m.def("corpus_entries", &corpus);
  m.def("corpus_text", &corpus_text);
  m.def("classify_json", &classify, py::arg("base"), py::arg("samples") = std::vector<std::vector<std::string>>{});
}
