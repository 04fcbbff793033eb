#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypercordial/cordial.hpp"
#include "hypercordial/explore.hpp"
#include "hypercordial/hypertree.hpp"
#include "hypercordial/labeling.hpp"
#include "hypercordial/serialize.hpp"
#include "hypercordial/zk.hpp"

namespace py = pybind11;
using namespace hypercordial;

PYBIND11_MODULE(_hypercordial, m) {
  m.doc() = "k-cordial labelings of p-uniform hypertrees";

  py::register_exception<Error>(m, "HypercordialError");

  py::class_<Hypertree>(m, "Hypertree")
      .def(py::init([](std::vector<std::vector<int>> edges, int n) {
             return Hypertree::validate(std::move(edges), n);
           }),
           py::arg("edges"), py::arg("n"))
      .def_property_readonly("n", &Hypertree::vertex_count)
      .def_property_readonly("m", &Hypertree::edge_count)
      .def_property_readonly("p", &Hypertree::edge_cardinality)
      .def_property_readonly("edges", &Hypertree::edges)
      .def("degree", &Hypertree::degree, py::arg("vertex"))
      .def("__eq__", [](const Hypertree& a, const Hypertree& b) { return a == b; })
      .def("__repr__", [](const Hypertree& t) {
        return "Hypertree(p=" + std::to_string(t.edge_cardinality()) +
               ", m=" + std::to_string(t.edge_count()) +
               ", n=" + std::to_string(t.vertex_count()) + ")";
      });

  py::class_<LeafEdgeDecomposition>(m, "LeafEdgeDecomposition")
      .def_readonly("edge_index", &LeafEdgeDecomposition::edge_index)
      .def_readonly("pendant_vertices", &LeafEdgeDecomposition::pendant_vertices)
      .def_readonly("anchor_vertex", &LeafEdgeDecomposition::anchor_vertex);

  m.def("find_removable_leaf_edge", &find_removable_leaf_edge, py::arg("tree"));
  m.def(
      "remove_leaf_edge",
      [](const Hypertree& tree, const LeafEdgeDecomposition& leaf) {
        auto removal = remove_leaf_edge(tree, leaf);
        return py::make_tuple(removal.remainder, removal.lift);
      },
      py::arg("tree"), py::arg("leaf"),
      "Returns (remainder or None, lift) where lift maps remainder ids back");
  m.def("attach_edge", &attach_edge, py::arg("tree"), py::arg("at_vertex"));
  m.def("canonical_form", &canonical_form, py::arg("tree"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
  m.def("enumerate_hypertrees", &enumerate_hypertrees, py::arg("p"), py::arg("m"));
  m.def("random_hypertree", &random_hypertree, py::arg("p"), py::arg("m"),
        py::arg("seed"));
  m.def("write_hypertree_text", &write_hypertree_text, py::arg("tree"));
  m.def("read_hypertree_text", &read_hypertree_text, py::arg("text"));
  m.def("read_hypertree_blocks", &read_hypertree_blocks, py::arg("text"));

  py::class_<VertexLabeling>(m, "VertexLabeling")
      .def(py::init<int, std::vector<int>>(), py::arg("k"), py::arg("labels"))
      .def_property_readonly("k", &VertexLabeling::modulus)
      .def_property_readonly("labels", &VertexLabeling::labels)
      .def_property_readonly("histogram", &VertexLabeling::histogram)
      .def("__repr__", [](const VertexLabeling& c) {
        return "VertexLabeling(k=" + std::to_string(c.modulus()) + ", n=" +
               std::to_string(c.labels().size()) + ")";
      });

  py::class_<EdgeLabelSummary>(m, "EdgeLabelSummary")
      .def_readonly("edge_labels", &EdgeLabelSummary::edge_labels)
      .def_readonly("histogram", &EdgeLabelSummary::histogram);

  m.def("induced_edge_labels", &induced_edge_labels, py::arg("tree"),
        py::arg("labeling"));
  m.def("is_k_friendly", &is_k_friendly, py::arg("labeling"));
  m.def("is_k_cordial_labeling", &is_k_cordial_labeling, py::arg("tree"),
        py::arg("labeling"));
  m.def(
      "labeling_json_text",
      [](const Hypertree& tree, const VertexLabeling& labeling) {
        return labeling_json(tree, labeling).dump();
      },
      py::arg("tree"), py::arg("labeling"));

  py::class_<SubsetSumWitness>(m, "SubsetSumWitness")
      .def_readonly("k", &SubsetSumWitness::modulus)
      .def_readonly("target", &SubsetSumWitness::target)
      .def_readonly("elements", &SubsetSumWitness::elements);

  m.def("verify_witness", &verify_witness, py::arg("witness"));
  m.def("distinct_subset_sum", &distinct_subset_sum, py::arg("k"), py::arg("l"),
        py::arg("a"));
  m.def("distinct_subset_sum_avoiding", &distinct_subset_sum_avoiding,
        py::arg("k"), py::arg("l"), py::arg("a"), py::arg("forbidden"));
  m.def("oracle_subset_sum", &oracle_subset_sum, py::arg("k"), py::arg("l"),
        py::arg("a"), py::arg("forbidden") = std::vector<int>{});

  m.def("theorem_applies", &theorem_applies, py::arg("p"), py::arg("k"));

  py::class_<ConstructionResult>(m, "ConstructionResult")
      .def_readonly("labeling", &ConstructionResult::labeling)
      .def_readonly("fallback_fired", &ConstructionResult::fallback_fired);

  m.def("label_hypertree", &label_hypertree, py::arg("tree"), py::arg("k"));

  py::enum_<SearchStatus>(m, "SearchStatus")
      .value("FOUND", SearchStatus::found)
      .value("NONE_EXISTS", SearchStatus::none_exists)
      .value("BUDGET_EXCEEDED", SearchStatus::budget_exceeded);

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("status", &BruteForceResult::status)
      .def_readonly("labeling", &BruteForceResult::labeling)
      .def_readonly("nodes_explored", &BruteForceResult::nodes_explored);

  m.def("brute_force_label", &brute_force_label, py::arg("tree"), py::arg("k"),
        py::arg("node_budget") = kDefaultNodeBudget);

  m.def(
      "explore_conjecture_json",
      [](int p_lo, int p_hi, int m_lo, int m_hi, int k_lo, int k_hi,
         std::uint64_t budget, int jobs) {
        ExploreConfig config;
        config.p_lo = p_lo;
        config.p_hi = p_hi;
        config.m_lo = m_lo;
        config.m_hi = m_hi;
        config.k_lo = k_lo;
        config.k_hi = k_hi;
        config.node_budget = budget;
        config.jobs = jobs;
        return report_json(explore_conjecture(config)).dump();
      },
      py::arg("p_lo"), py::arg("p_hi"), py::arg("m_lo"), py::arg("m_hi"),
      py::arg("k_lo"), py::arg("k_hi"), py::arg("budget") = kDefaultNodeBudget,
      py::arg("jobs") = 1);
}
