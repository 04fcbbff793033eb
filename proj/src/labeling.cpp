#include "hypercordial/labeling.hpp"

#include <algorithm>

namespace hypercordial {

VertexLabeling::VertexLabeling(int modulus, std::vector<int> labels)
    : k_(modulus), labels_(std::move(labels)) {
  if (k_ < 1)
    throw Error(Errc::invalid_label, "modulus must be at least 1");
  histogram_.assign(k_, 0);
  for (int x : labels_) {
    if (x < 0 || x >= k_)
      throw Error(Errc::invalid_label,
                  "label " + std::to_string(x) + " not in 0.." +
                      std::to_string(k_ - 1));
    ++histogram_[x];
  }
}

int histogram_spread(const std::vector<int>& histogram) {
  if (histogram.empty()) return 0;
  auto [lo, hi] = std::minmax_element(histogram.begin(), histogram.end());
  return *hi - *lo;
}

EdgeLabelSummary induced_edge_labels(const Hypertree& tree,
                                     const VertexLabeling& labeling) {
  if (static_cast<int>(labeling.labels().size()) != tree.vertex_count())
    throw Error(Errc::length_mismatch,
                "labeling covers " + std::to_string(labeling.labels().size()) +
                    " vertices, hypertree has " +
                    std::to_string(tree.vertex_count()));
  EdgeLabelSummary summary;
  summary.histogram.assign(labeling.modulus(), 0);
  for (const auto& edge : tree.edges()) {
    int sum = 0;
    for (int v : edge) sum += labeling.label(v);
    int value = sum % labeling.modulus();
    summary.edge_labels.push_back(value);
    ++summary.histogram[value];
  }
  return summary;
}

bool is_k_friendly(const VertexLabeling& labeling) {
  return histogram_spread(labeling.histogram()) <= 1;
}

bool is_k_cordial_labeling(const Hypertree& tree,
                           const VertexLabeling& labeling) {
  return is_k_friendly(labeling) &&
         histogram_spread(induced_edge_labels(tree, labeling).histogram) <= 1;
}

}  // namespace hypercordial
