#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nest/canonical.hpp"
#include "nest/census.hpp"
#include "nest/graph.hpp"
#include "nest/nest_family.hpp"
#include "nest/perm_group.hpp"
#include "nest/symmetry.hpp"

namespace py = pybind11;
using namespace nest;

namespace {

py::object order_to_py(GroupOrder order) {
  // 128-bit orders round-trip through their decimal form
  return py::int_(py::str(group_order_to_string(order)));
}

} // namespace

PYBIND11_MODULE(_nestcensus, m) {
  m.doc() = "Nest graph family, permutation groups, canonical forms and the "
            "edge-transitive census";

  py::class_<Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", &Perm::images)
      .def("__call__", &Perm::operator())
      .def("inverse", &Perm::inverse)
      .def("order", &Perm::order)
      .def("is_identity", &Perm::is_identity)
      .def("__mul__",
           [](const Perm &p, const Perm &q) { return p * q; })
      .def("__eq__", [](const Perm &p, const Perm &q) { return p == q; })
      .def("__repr__", [](const Perm &p) {
        return "Perm(" + p.cycle_string() + ")";
      });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<int, std::vector<Perm>>(), py::arg("degree"),
           py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly(
          "order", [](const PermGroup &g) { return order_to_py(g.order()); })
      .def_property_readonly("generators", &PermGroup::generators)
      .def("contains", &PermGroup::contains)
      .def("orbit", &PermGroup::orbit)
      .def("orbits",
           [](const PermGroup &g) { return g.orbits().classes(); })
      .def("is_transitive", &PermGroup::is_transitive)
      .def("point_stabilizer", &PermGroup::point_stabilizer)
      .def("pointwise_stabilizer", &PermGroup::pointwise_stabilizer);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>> &>(),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors", &Graph::neighbors)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("common_neighbors", &Graph::common_neighbors)
      .def("is_connected", &Graph::is_connected)
      .def("girth",
           [](const Graph &g) -> py::object {
             const auto value = g.girth();
             return value ? py::cast(*value) : py::none();
           })
      .def("to_json", &Graph::to_json)
      .def_static("from_json", &Graph::from_json);

  py::class_<NestParams>(m, "NestParams")
      .def_readonly("n", &NestParams::n)
      .def_readonly("a", &NestParams::a)
      .def_readonly("b", &NestParams::b)
      .def_readonly("c", &NestParams::c)
      .def_readonly("k", &NestParams::k)
      .def("__repr__",
           [](const NestParams &p) {
             return "NestParams(" + p.to_string() + ")";
           })
      .def("__eq__", [](const NestParams &p, const NestParams &q) {
        return p == q;
      });

  m.def("validate_params", &validate_params, py::arg("n"), py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("k"));
  m.def("parse_params", &NestParams::parse, py::arg("text"));
  m.def("build_nest", &build_nest);
  m.def("rho_perm", &rho_perm);
  m.def("phi_perm", &phi_perm, py::arg("m"));
  m.def("eta_perm", &eta_perm, py::arg("m"));
  m.def("symmetric_variants", &symmetric_variants);
  m.def("canonical_variant", &canonical_variant);
  m.def("quotient_params",
        [](const NestParams &p, int d) -> py::object {
          const auto q = quotient_params(p, d);
          return q ? py::cast(*q) : py::none();
        });

  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("petersen", &petersen);
  m.def("petersen_complement", &petersen_complement);
  m.def("hamming_2_4", &hamming_2_4);
  m.def("shrikhande", &shrikhande);

  m.def("automorphism_group", &automorphism_group);
  m.def("canonical_hex",
        [](const Graph &g) { return canonical_form(g).hex(); });
  m.def("are_isomorphic",
        [](const Graph &a, const Graph &b) -> py::object {
          const auto witness = are_isomorphic(a, b);
          return witness ? py::cast(witness->images()) : py::none();
        });

  m.def("is_vertex_transitive", &is_vertex_transitive);
  m.def("is_edge_transitive", &is_edge_transitive);
  m.def("is_arc_transitive", &is_arc_transitive);
  m.def("is_primitive", &is_primitive);

  m.def("prefilter", &prefilter);
  m.def("enumerate_params",
        [](int max_n) {
          return enumerate_params(max_n);
        },
        py::arg("max_n"));
  m.def("profile_json",
        [](const NestParams &p) { return profile(p).to_json_line(); });
  m.def(
      "census_run",
      [](int max_n, const std::string &out, int jobs, bool resume) {
        CensusOptions options;
        options.jobs = jobs;
        options.resume = resume;
        const CensusStats stats = census_run(max_n, out, options);
        py::dict d;
        d["tuples"] = stats.tuples;
        d["survivors"] = stats.survivors;
        d["reused"] = stats.reused;
        d["iso_classes"] = stats.iso_classes;
        return d;
      },
      py::arg("max_n"), py::arg("out"), py::arg("jobs") = 1,
      py::arg("resume") = false);
  m.def("verify_theorem_json", [](const std::string &path) {
    const TheoremReport report = verify_theorem(path);
    return py::make_tuple(report.to_json(), report.exit_code());
  });
  m.def("invariant_suite_json", [](const std::string &path) {
    const InvariantReport report = invariant_suite(path);
    return py::make_tuple(report.to_json(), report.all_pass);
  });
}
