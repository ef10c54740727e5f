#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dissoc/families.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/verify.hpp"

namespace py = pybind11;
using namespace dissoc;

namespace {

std::vector<VertexConstraint> to_constraints(const std::map<Vertex, std::string>& spec) {
  std::vector<VertexConstraint> out;
  for (const auto& [v, status] : spec) out.push_back({v, parse_vertex_status(status)});
  return out;
}

VerifyOptions options(int jobs) {
  VerifyOptions opts;
  opts.jobs = jobs;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_dissoc, m) {
  m.doc() = "Maximal dissociation set enumeration";
  m.attr("ENGINE_VERSION") = kEngineVersion;

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> es;
             for (const auto& [a, b] : edges) es.push_back({a, b});
             return Graph::from_edges(order, es);
           }),
           py::arg("order"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("star", &Graph::star)
      .def_static("complete", &Graph::complete)
      .def_static("empty", &Graph::empty)
      .def_static("from_graph6", [](const std::string& text) { return graph6_decode(text); })
      .def("to_graph6", [](const Graph& g) { return graph6_encode(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.first, e.second);
             return out;
           })
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).to_vector(); })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("classify", [](const Graph& g) { return std::string(to_string(classify(g).kind)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__hash__", [](const Graph& g) { return std::hash<std::string>{}(graph6_encode(g)); })
      .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + graph6_encode(g) + "')"; });

  m.def("phi", [](const Graph& g) { return phi(g); }, py::arg("graph"));
  m.def(
      "phi_refined",
      [](const Graph& g, const std::map<Vertex, std::string>& constraints) {
        return phi_refined(g, to_constraints(constraints));
      },
      py::arg("graph"), py::arg("constraints"),
      "Counts maximal dissociation sets under {vertex: 'excluded' | 'in' | 'in0' | 'in1'}.");
  m.def(
      "enumerate_mds",
      [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (VertexSet s : enumerate_mds(g)) out.push_back(s.to_vector());
        return out;
      },
      py::arg("graph"));
  m.def(
      "mds_profile",
      [](const Graph& g) {
        const auto profile = mds_profile(g);
        std::vector<std::tuple<Count, Count, Count>> rows;
        for (const auto& p : profile.per_vertex) rows.emplace_back(p.excluded, p.in_degree0, p.in_degree1);
        return std::pair{profile.total, rows};
      },
      py::arg("graph"), "(phi, [(excluded, in0, in1) per vertex]).");
  m.def("is_dissociation", [](const Graph& g, const std::vector<Vertex>& s) {
    VertexSet set;
    for (Vertex v : s) set.insert(v);
    return is_dissociation(g, set);
  });

  m.def("spider_T", &spider_T, py::arg("p"), py::arg("q"));
  m.def("U_pq", &U_pq, py::arg("p"), py::arg("q"));
  m.def(
      "U_rt", [](int r, int t, const std::vector<int>& pattern) { return U_rt(r, t, pattern); }, py::arg("r"),
      py::arg("t"), py::arg("pattern"));
  m.def("family", [](const std::string& spec) { return FamilySpec::parse(spec).build(); }, py::arg("spec"));
  m.def("extremal_unicyclic", &extremal_unicyclic, py::arg("n"));
  m.def("extremal_trees", &extremal_trees, py::arg("n"));

  m.def("tree_code", [](const Graph& g) { return tree_code(g).bytes; });
  m.def("unicyclic_code", [](const Graph& g) { return unicyclic_code(g).bytes; });
  m.def("generate_trees", [](int n) { return generate_trees(n); }, py::arg("n"));
  m.def("generate_caterpillars", [](int n) { return generate_caterpillars(n); }, py::arg("n"));
  m.def("generate_unicyclic", [](int n) { return generate_unicyclic(n); }, py::arg("n"));

  // Reports cross as JSON text; the Python package decodes them.
  auto json_of = [](const VerificationReport& r) { return reports_to_json({r}); };
  m.def("_check_main_theorem", [=](int n, int jobs) { return json_of(check_main_theorem(n, options(jobs))); });
  m.def("_check_tree_theorem", [=](int n, int jobs) { return json_of(check_tree_theorem(n, options(jobs))); });
  m.def("_check_cycle_lemma",
        [=](int lo, int hi, int jobs) { return json_of(check_cycle_lemma(lo, hi, options(jobs))); });
  m.def("_check_surgery_lemma",
        [=](int cap, int k_max, int jobs) { return json_of(check_surgery_lemma(cap, k_max, options(jobs))); });
  m.def("_check_pendant_path_lemma",
        [=](int n, int jobs) { return json_of(check_pendant_path_lemma(n, options(jobs))); });
  m.def("_check_case3_subcases", [=](int n, int jobs) { return json_of(check_case3_subcases(n, options(jobs))); });
}
