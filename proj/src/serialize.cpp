#include "hypercordial/serialize.hpp"

namespace hypercordial {

nlohmann::ordered_json labeling_json(const Hypertree& tree,
                                     const VertexLabeling& labeling) {
  auto summary = induced_edge_labels(tree, labeling);
  nlohmann::ordered_json j;
  j["k"] = labeling.modulus();
  j["labels"] = labeling.labels();
  j["edge_labels"] = summary.edge_labels;
  j["vertex_hist"] = labeling.histogram();
  j["edge_hist"] = summary.histogram;
  j["k_friendly"] = is_k_friendly(labeling);
  j["k_cordial"] = is_k_friendly(labeling) &&
                   histogram_spread(summary.histogram) <= 1;
  return j;
}

nlohmann::ordered_json report_json(const ExploreReport& report) {
  nlohmann::ordered_json j;
  j["p_range"] = {report.config.p_lo, report.config.p_hi};
  j["m_range"] = {report.config.m_lo, report.config.m_hi};
  j["k_range"] = {report.config.k_lo, report.config.k_hi};
  j["budget"] = report.config.node_budget;
  j["instances"] = report.instances;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& cell : report.cells) {
    nlohmann::ordered_json c;
    c["p"] = cell.p;
    c["m"] = cell.m;
    c["k"] = cell.k;
    c["cordial"] = cell.cordial;
    c["non_cordial"] = cell.non_cordial;
    c["exceeded"] = cell.exceeded;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  auto counterexamples = nlohmann::ordered_json::array();
  for (const auto& cx : report.counterexamples) {
    nlohmann::ordered_json c;
    c["p"] = cx.p;
    c["m"] = cx.m;
    c["k"] = cx.k;
    c["hypertree"] = write_hypertree_text(cx.tree);
    counterexamples.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(counterexamples);
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.construction_failures) {
    nlohmann::ordered_json c;
    c["p"] = f.p;
    c["m"] = f.m;
    c["k"] = f.k;
    c["hypertree"] = write_hypertree_text(f.tree);
    c["message"] = f.message;
    failures.push_back(std::move(c));
  }
  j["construction_failures"] = std::move(failures);
  return j;
}

}  // namespace hypercordial
