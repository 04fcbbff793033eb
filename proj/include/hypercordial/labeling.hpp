#pragma once

#include <vector>

#include "hypercordial/error.hpp"
#include "hypercordial/hypertree.hpp"

namespace hypercordial {

// A completed assignment of Z_k values to vertices, immutable after
// construction, with its label histogram. Partial labelings live inside the
// search code, not here.
class VertexLabeling {
 public:
  // Throws Error(invalid_label) unless every label is in 0..k-1, k >= 1.
  VertexLabeling(int modulus, std::vector<int> labels);

  int modulus() const { return k_; }
  int label(int vertex) const { return labels_[vertex]; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<int>& histogram() const { return histogram_; }

  bool operator==(const VertexLabeling& other) const = default;

 private:
  int k_ = 1;
  std::vector<int> labels_;
  std::vector<int> histogram_;
};

struct EdgeLabelSummary {
  std::vector<int> edge_labels;  // (sum of vertex labels) mod k, per edge
  std::vector<int> histogram;    // counts per residue, sums to edge_count
};

// max - min over all k buckets; 0 for an empty histogram.
int histogram_spread(const std::vector<int>& histogram);

// Throws Error(length_mismatch) when the labeling does not cover the tree.
EdgeLabelSummary induced_edge_labels(const Hypertree& tree,
                                     const VertexLabeling& labeling);

// True iff the vertex label counts pairwise differ by at most 1.
bool is_k_friendly(const VertexLabeling& labeling);

// True iff the labeling is k-friendly and the induced edge label counts
// pairwise differ by at most 1.
bool is_k_cordial_labeling(const Hypertree& tree,
                           const VertexLabeling& labeling);

}  // namespace hypercordial
