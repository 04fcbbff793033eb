#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypercordial/error.hpp"

namespace hypercordial {

// A p-uniform hypertree on vertices 0..n-1, stored in normal form: vertices
// sorted within each edge, edges sorted lexicographically. Construction goes
// through validate(), so every instance is p-uniform, connected, acyclic,
// has pairwise edge intersections of at most one vertex, and satisfies
// n = (p-1)*m + 1.
class Hypertree {
 public:
  // Checks every structural invariant on raw input and returns the
  // normalized hypertree. Throws Error with one of: non_uniform,
  // duplicate_vertex_in_edge, vertex_out_of_range, duplicate_edge,
  // has_cycle, disconnected, empty_hypertree.
  static Hypertree validate(std::vector<std::vector<int>> raw_edges,
                            int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int edge_cardinality() const { return p_; }

  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

  bool operator==(const Hypertree& other) const {
    return n_ == other.n_ && p_ == other.p_ && edges_ == other.edges_;
  }

 private:
  Hypertree(int n, int p, std::vector<std::vector<int>> edges);

  int n_ = 0;
  int p_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incidence_;  // vertex -> sorted edge indices
};

// One removable leaf edge: p-1 vertices of degree 1 plus the anchor that
// connects it to the rest. The anchor is absent exactly when the hypertree
// has a single edge.
struct LeafEdgeDecomposition {
  int edge_index = -1;
  std::vector<int> pendant_vertices;  // sorted, degree 1 each
  std::optional<int> anchor_vertex;
};

// Smallest-index edge having at least p-1 degree-1 vertices. Such an edge
// always exists in a valid hypertree.
LeafEdgeDecomposition find_removable_leaf_edge(const Hypertree& tree);

// Result of peeling one leaf edge. `remainder` is empty when the input had a
// single edge. `lift[j]` is the original vertex id of the remainder's
// vertex j, so labelings of the remainder lift back to the original.
struct LeafRemoval {
  std::optional<Hypertree> remainder;
  std::vector<int> lift;
};

LeafRemoval remove_leaf_edge(const Hypertree& tree,
                             const LeafEdgeDecomposition& leaf);

// Grows the hypertree by one edge through `at_vertex`: the new edge consists
// of `at_vertex` plus p-1 fresh vertices.
Hypertree attach_edge(const Hypertree& tree, int at_vertex);

// Exact canonical representative of the isomorphism class. The bipartite
// incidence graph of a hypertree is itself a tree, so this is rooted-tree
// canonization at the tree center.
Hypertree canonical_form(const Hypertree& tree);

bool isomorphic(const Hypertree& a, const Hypertree& b);

// All p-uniform hypertrees with m edges, one representative per isomorphism
// class, in canonical-text order. Grown by the inverse of leaf-edge peeling:
// every class is reached by attaching edges one shared vertex at a time.
std::vector<Hypertree> enumerate_hypertrees(int p, int m);

// Uniform attachment process, deterministic given the seed: each new edge
// passes through an existing vertex drawn uniformly at random.
Hypertree random_hypertree(int p, int m, std::uint64_t seed);

// Text format, read and written bit-exactly:
//   line 1:        "p m n"
//   lines 2..m+1:  p space-separated 0-based vertex ids
std::string write_hypertree_text(const Hypertree& tree);
Hypertree read_hypertree_text(const std::string& text);
// Parses a file containing one hypertree per blank-line-separated block.
std::vector<Hypertree> read_hypertree_blocks(const std::string& text);

}  // namespace hypercordial
