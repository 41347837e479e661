#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopenergy/bounds.hpp"
#include "loopenergy/error.hpp"
#include "loopenergy/extremal.hpp"
#include "loopenergy/graph.hpp"
#include "loopenergy/graph_file.hpp"
#include "loopenergy/report.hpp"
#include "loopenergy/spectral.hpp"
#include "loopenergy/verify.hpp"

namespace py = pybind11;
using namespace loopenergy;

namespace {

FamilyName family_from(const std::string& text) {
  const auto name = parse_family_name(text);
  if (!name) throw Error(ErrorKind::InvalidFamily, "unknown family '" + text + "'");
  return *name;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Energy and spectral bounds of graphs with self-loops";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<SelfLoopGraph>(m, "Graph")
      .def(py::init([](int n, std::vector<Edge> edges, std::vector<Vertex> loops) {
             return SelfLoopGraph::from_edge_list(n, edges, loops);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{}, py::arg("loops") = std::vector<Vertex>{})
      .def_property_readonly("order", &SelfLoopGraph::order)
      .def_property_readonly("size", &SelfLoopGraph::size)
      .def_property_readonly("loop_count", &SelfLoopGraph::loop_count)
      .def_property_readonly("edges", &SelfLoopGraph::edges)
      .def_property_readonly("loops", &SelfLoopGraph::loops)
      .def("has_edge", &SelfLoopGraph::has_edge)
      .def("has_loop", &SelfLoopGraph::has_loop)
      .def("degree", &SelfLoopGraph::degree)
      .def("adjacency", [](const SelfLoopGraph& g) {
        const auto a = adjacency_matrix(g);
        std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
        for (int i = 0; i < g.order(); ++i)
          for (int j = 0; j < g.order(); ++j) rows[i][j] = a(i, j);
        return rows;
      })
      .def("__eq__", [](const SelfLoopGraph& a, const SelfLoopGraph& b) { return a == b; })
      .def("__repr__", [](const SelfLoopGraph& g) { return "Graph(" + graph_one_liner(g) + ")"; });

  m.def("make_family", [](const std::string& name, int n, int sigma) {
    return make_family(family_from(name), n, sigma);
  }, py::arg("name"), py::arg("n"), py::arg("sigma") = 0);
  m.def("disjoint_union", &disjoint_union);
  m.def("connected_components", &connected_components);
  m.def("is_connected", &is_connected);

  m.def("canonical_code", [](const SelfLoopGraph& g) { return canonical_code(g).to_string(); });
  m.def("parse_graph", &parse_graph_file, py::arg("text"));
  m.def("serialize_graph", &serialize_graph_file);

  m.def("eigenvalues", [](const SelfLoopGraph& g, double tol) { return eigenvalues(g, tol).values; },
        py::arg("graph"), py::arg("tol") = 1e-10);
  m.def("energy", [](const SelfLoopGraph& g) {
    return energy(shifted_spectrum(eigenvalues(g), g.order(), g.loop_count()));
  });
  m.def("gutman_upper", &gutman_upper, py::arg("n"), py::arg("m"), py::arg("sigma"));

  m.def("bound_report_json", [](const SelfLoopGraph& g, double tol) {
    const auto report = bound_report(g, tol);
    return report_json(g, report, classify(g, report.spectrum, tol)).dump();
  }, py::arg("graph"), py::arg("tol") = kDefaultEqualityTol);

  m.def("verify_json", [](int max_n, double tol, bool dedup, int jobs) {
    const SweepOptions options{max_n, tol, dedup, jobs};
    SweepSummary summary;
    {
      py::gil_scoped_release release;
      summary = verify_all(options);
    }
    return summary_json(summary, options).dump();
  }, py::arg("max_n") = 6, py::arg("tol") = kDefaultEqualityTol, py::arg("dedup") = false,
     py::arg("jobs") = 1);

  m.def("find_extremal", [](int n, std::optional<int> sigma, const std::string& bound, std::size_t top,
                            int jobs) {
    std::vector<ExtremalEntry> entries;
    const BoundId id = parse_bound_id(bound);
    {
      py::gil_scoped_release release;
      entries = find_extremal(n, sigma, id, top, jobs);
    }
    py::list rows;
    for (const auto& e : entries) {
      py::dict row;
      row["code"] = e.code.to_string();
      row["observed"] = e.observed;
      row["bound"] = e.bound;
      row["gap"] = e.gap;
      row["graph"] = graph_from_code(e.code);
      rows.append(row);
    }
    return rows;
  }, py::arg("n"), py::arg("sigma") = py::none(), py::arg("bound") = "gutman", py::arg("top") = 10,
     py::arg("jobs") = 1);
}
