#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercordial/error.hpp"
#include "hypercordial/hypertree.hpp"
#include "hypercordial/labeling.hpp"

namespace hypercordial {

// True iff the constructive labeler covers (p, k): k = 1, or p odd and k
// even, or p ≡ 1 (mod k), or p ≡ 0 (mod k).
bool theorem_applies(int p, int k);

// Bookkeeping for one inductive step: how the p-1 pendant vertices of a
// re-attached leaf edge get labeled.
struct ExtensionPlan {
  LeafEdgeDecomposition leaf;
  int anchor_label = 0;
  int residue_a = 0;                // |T'| mod k
  std::vector<int> upper_labels;    // the a labels at the higher count
  int target_edge_label = 0;        // chosen least-used edge label
  std::vector<int> first_block;     // Z_k \ upper_labels, used once each
  int full_block_count = 0;         // b full copies of Z_k
  int remainder_size = 0;           // r
  std::vector<int> remainder_labels;  // r distinct labels fixing the sum
  bool fallback = false;            // p-1 < k-a corner, constrained search
  int achieved_edge_label = 0;

  std::string describe() const;
};

struct ConstructionResult {
  VertexLabeling labeling;
  bool fallback_fired = false;
  std::vector<ExtensionPlan> plans;  // one per re-attached edge
  // Steps where r = 0 occurred although p ≡ 1 (mod k) or (p odd, k even)
  // held; such steps would contradict the construction's r > 0 claim.
  std::vector<int> r_claim_violations;
};

// The constructive labeler: peels leaf edges down to a single edge, labels
// the base edge round-robin, then re-attaches edges one at a time, executing
// an ExtensionPlan per edge. The result is verified k-friendly with edge
// spread <= 1 after every step. Deterministic given (tree, k).
// Throws Error(theorem_not_applicable) outside the covered (p, k) pairs and
// Error(internal_contradiction) — carrying the plan dump — if any step
// assertion fails or the fallback search exhausts.
ConstructionResult label_hypertree(const Hypertree& tree, int k);

enum class SearchStatus { found, none_exists, budget_exceeded };

struct BruteForceResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<VertexLabeling> labeling;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

// Exhaustive backtracking over vertex labels with incremental friendliness
// pruning (no label count may pass ceil(n/k)), edge-count pruning, and the
// global-shift reduction fixing the first label to 0 when gcd(p, k) = 1.
// `none_exists` is definitive; `budget_exceeded` is not.
BruteForceResult brute_force_label(const Hypertree& tree, int k,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace hypercordial
