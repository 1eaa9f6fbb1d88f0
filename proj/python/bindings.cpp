#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratgk/construct.hpp"
#include "ratgk/facts.hpp"
#include "ratgk/group_spec.hpp"
#include "ratgk/rationality.hpp"
#include "ratgk/subgroups.hpp"

namespace py = pybind11;
using namespace ratgk;

namespace {

py::dict graph_dict(const PrimeGraph& g) {
  py::dict d;
  d["vertices"] = g.vertices;
  d["edges"] = g.edges;
  return d;
}

py::dict fact_dict(const FactReport& r) {
  py::list facts;
  for (const auto& f : r.facts) {
    py::dict d;
    d["id"] = f.id;
    d["location"] = f.location;
    d["verdict"] = f.verdict;
    d["evidence"] = f.evidence;
    facts.append(d);
  }
  py::dict out;
  out["title"] = r.title;
  out["passed"] = r.all_passed();
  out["facts"] = facts;
  return out;
}

}  // namespace

PYBIND11_MODULE(_ratgk, m) {
  m.doc() = "Finite group rationality and Gruenberg-Kegel graph queries";

  py::register_exception<GroupError>(m, "GroupError");
  py::register_exception<SpecError>(m, "SpecError");

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def("element_orders",
           [](const FiniteGroup& g) {
             auto s = g.element_orders();
             return std::vector<std::uint64_t>(s.begin(), s.end());
           })
      .def("class_sizes",
           [](const FiniteGroup& g) {
             std::vector<std::size_t> sizes;
             for (const auto& c : g.conjugacy_classes().classes) sizes.push_back(c.size());
             return sizes;
           })
      .def("is_rational", [](const FiniteGroup& g) { return is_rational(g); })
      .def("is_cut", [](const FiniteGroup& g) { return is_cut(g); })
      .def("is_solvable", [](const FiniteGroup& g) { return is_solvable(g); })
      .def("gk_graph", [](const FiniteGroup& g) { return graph_dict(gk_graph(g)); })
      .def("classify", [](const FiniteGroup& g) {
        const Classification c = classify_rational_solvable(g);
        py::dict d;
        d["graph"] = graph_dict(c.graph);
        d["solvable"] = c.solvable;
        d["rational"] = c.rational;
        d["figure"] = c.figure;
        d["matches"] = c.matches;
        d["reason"] = c.reason;
        return d;
      })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("named_group", &named_group, py::arg("name"));
  m.def(
      "group_from_spec",
      [](const std::string& doc, std::size_t cap) { return build_group(parse_group_spec(doc), cap).group; },
      py::arg("document"), py::arg("cap") = kDefaultOrderCap);
  m.def("admissible_graphs", [] {
    py::list out;
    for (const auto& g : admissible_graphs()) out.append(graph_dict(g));
    return out;
  });
  m.def("verify_paper", [] { return fact_dict(verify_paper()); });
  m.def("witness_suite", [](std::size_t cap) { return fact_dict(witness_suite(cap)); }, py::arg("cap") = kDefaultOrderCap);
}
