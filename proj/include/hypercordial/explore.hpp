#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercordial/cordial.hpp"
#include "hypercordial/hypertree.hpp"

namespace hypercordial {

struct ExploreConfig {
  int p_lo = 2, p_hi = 2;
  int m_lo = 1, m_hi = 1;
  int k_lo = 1, k_hi = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int jobs = 1;
};

struct ExploreCell {
  int p = 0, m = 0, k = 0;
  int cordial = 0;
  int non_cordial = 0;
  int exceeded = 0;
};

struct Counterexample {
  int p = 0, m = 0, k = 0;
  Hypertree tree;
};

// A (tree, k) where the theorem route applied but the constructed labeling
// failed verification or the construction threw.
struct ConstructionFailure {
  int p = 0, m = 0, k = 0;
  Hypertree tree;
  std::string message;
};

struct ExploreReport {
  ExploreConfig config;
  std::uint64_t instances = 0;
  std::vector<ExploreCell> cells;                      // ordered by (p, m, k)
  std::vector<Counterexample> counterexamples;         // instance order
  std::vector<ConstructionFailure> construction_failures;
};

// Brute-force sweep over every enumerated hypertree and every k in range.
// Wherever theorem_applies holds, the constructive labeler is cross-checked
// as well. Instances are independent; with jobs > 1 they run in parallel and
// the report is identical to the sequential one.
// Throws Error(invalid_config) for empty or unbounded ranges or budget 0.
ExploreReport explore_conjecture(const ExploreConfig& config);

}  // namespace hypercordial
