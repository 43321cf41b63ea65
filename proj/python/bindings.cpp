#include <optional>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alphaspec/enumerate.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/parallel.hpp"
#include "alphaspec/generators.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/json_io.hpp"
#include "alphaspec/spectral.hpp"
#include "alphaspec/verify.hpp"

namespace py = pybind11;
using namespace alphaspec;

namespace {

// Documents cross as plain Python objects with the same content the CLI prints.
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

TheoremReport run_verify(const std::string& theorem, const std::optional<std::string>& n,
                         const std::optional<std::vector<double>>& alphas, std::optional<int> workers,
                         std::uint64_t seed, double strict_margin, double equality_window, bool certify_ties,
                         const std::string& checkpoint) {
  VerifyOptions opt;
  if (alphas) {
    for (double a : *alphas) Alpha(a).require_below_one("verify");
    opt.alphas = *alphas;
  }
  opt.workers = workers.value_or(default_workers());
  opt.seed = seed;
  opt.strict_margin = strict_margin;
  opt.equality_window = equality_window;
  opt.certify_ties = certify_ties;
  opt.checkpoint_dir = checkpoint;
  std::optional<NRange> range;
  if (n) range = parse_n_range(*n);
  py::gil_scoped_release release;
  return run_theorem(resolve_theorem_id(theorem), range, opt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectra and bounds of A_alpha = alpha D + (1 - alpha) A";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); }, py::arg("text"))
      .def_property_readonly("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("to_dict", [](const Graph& g) { return to_python(graph_document(g)); })
      .def(py::self == py::self)
      .def("__hash__", [](const Graph& g) { return py::hash(py::str(graph6_encode(g))); })
      .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + graph6_encode(g) + "')"; });

  m.def("family", [](const std::string& spec) { return parse_family(spec); }, py::arg("spec"),
        "Named family such as 'Sn:5', 'Snpe:6', 'Tnd:10,4' or 'Cn:8'.");
  m.def(
      "enumerate",
      [](const std::string& cls, int n) { return alphaspec::enumerate({n, parse_graph_class(cls)}); },
      py::arg("graph_class"), py::arg("n"),
      "Non-isomorphic graphs of a class: trees, unicyclic, connected, all, connected-nonbipartite.");

  m.def("eigenvalues", [](const Graph& g, double a) { return alpha_eigenvalues(g, Alpha(a)); }, py::arg("g"),
        py::arg("alpha"), "Eigenvalues of A_alpha in non-increasing order.");
  m.def("spectral_radius", [](const Graph& g, double a) { return alpha_spectral_radius(g, Alpha(a)); },
        py::arg("g"), py::arg("alpha"));
  m.def("spectrum", [](const Graph& g, double a) { return to_python(spectrum_document(g, Alpha(a))); },
        py::arg("g"), py::arg("alpha"));
  m.def("bounds", [](const Graph& g, double a) { return to_python(bounds_document(g, Alpha(a))); }, py::arg("g"),
        py::arg("alpha"));
  m.def("indices", [](const Graph& g, double a) { return to_python(indices_document(g, Alpha(a))); },
        py::arg("g"), py::arg("alpha") = 0.0);

  m.def("theorems", [] {
    py::list out;
    for (const auto& t : known_theorems()) {
      py::dict d;
      d["id"] = t.id;
      d["aliases"] = t.aliases;
      d["summary"] = t.summary;
      d["default_n"] = to_string(t.default_range);
      out.append(d);
    }
    return out;
  });
  m.def(
      "verify",
      [](const std::string& theorem, const std::optional<std::string>& n,
         const std::optional<std::vector<double>>& alphas, std::optional<int> workers, std::uint64_t seed,
         double strict_margin, double equality_window, bool certify_ties, const std::string& checkpoint) {
        return to_python(to_json(run_verify(theorem, n, alphas, workers, seed, strict_margin, equality_window,
                                            certify_ties, checkpoint)));
      },
      py::arg("theorem"), py::arg("n") = py::none(), py::arg("alphas") = py::none(),
      py::arg("workers") = py::none(), py::arg("seed") = VerifyOptions{}.seed,
      py::arg("strict_margin") = VerifyOptions{}.strict_margin,
      py::arg("equality_window") = VerifyOptions{}.equality_window, py::arg("certify_ties") = true,
      py::arg("checkpoint") = std::string{},
      "Checks one theorem exhaustively and returns its report; n is '7' or '5..10'.");
}
