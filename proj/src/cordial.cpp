#include "hypercordial/cordial.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "hypercordial/zk.hpp"

namespace hypercordial {

bool theorem_applies(int p, int k) {
  if (k == 1) return true;
  if (p % 2 == 1 && k % 2 == 0) return true;
  return p % k == 1 || p % k == 0;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// The construction claims r > 0 under these two hypotheses.
bool r_positive_claimed(int p, int k) {
  return (k >= 2 && p % k == 1) || (p % 2 == 1 && k % 2 == 0);
}

}  // namespace

std::string ExtensionPlan::describe() const {
  std::ostringstream out;
  out << "edge_index=" << leaf.edge_index
      << " pendants=[" << join(leaf.pendant_vertices) << "]"
      << " anchor="
      << (leaf.anchor_vertex ? std::to_string(*leaf.anchor_vertex) : "none")
      << " anchor_label=" << anchor_label << " a=" << residue_a
      << " I=[" << join(upper_labels) << "]"
      << " target=" << target_edge_label
      << " first_block=[" << join(first_block) << "]"
      << " b=" << full_block_count << " r=" << remainder_size
      << " R=[" << join(remainder_labels) << "]"
      << " fallback=" << (fallback ? "yes" : "no")
      << " achieved=" << achieved_edge_label;
  return out.str();
}

namespace {

struct PeelStep {
  Hypertree before;
  LeafEdgeDecomposition leaf;
  std::vector<int> lift;
};

// Recomputes both histograms of the partial structure from scratch and
// compares them with the incrementally maintained ones; the induction
// hypothesis (friendly, edge spread <= 1) is asserted per step.
void check_partial(const Hypertree& partial, const std::vector<int>& labels,
                   int k, const std::vector<int>& vertex_hist,
                   const std::vector<int>& edge_hist,
                   const ExtensionPlan& plan) {
  VertexLabeling labeling(k, labels);
  if (labeling.histogram() != vertex_hist)
    throw Error(Errc::internal_contradiction,
                "vertex histogram drifted from incremental state",
                plan.describe());
  auto summary = induced_edge_labels(partial, labeling);
  if (summary.histogram != edge_hist)
    throw Error(Errc::internal_contradiction,
                "edge histogram drifted from incremental state",
                plan.describe());
  if (histogram_spread(vertex_hist) > 1)
    throw Error(Errc::internal_contradiction,
                "extension broke friendliness", plan.describe());
  if (histogram_spread(edge_hist) > 1)
    throw Error(Errc::internal_contradiction,
                "extension broke the edge balance", plan.describe());
}

// The rebuild walks the peel steps in reverse, executing one ExtensionPlan
// per re-attached edge. Targets are tried smallest-least-used first, so the
// straight-line behavior matches the greedy construction; when a later step
// runs out of admissible edge labels (only possible around the p-1 < k-a
// corner, where the pendant labels are forced to be distinct non-upper
// values), earlier choices are revisited.
struct RebuildSearch {
  int k, p;
  const std::vector<PeelStep>& steps;  // peel order; replayed in reverse

  std::vector<ExtensionPlan> plans;
  std::vector<int> final_labels;
  std::uint64_t options_tried = 0;
  static constexpr std::uint64_t kOptionCap = 500'000;

  struct State {
    std::vector<int> labels;  // over the ids of the tree at this depth
    std::vector<int> vertex_hist;
    std::vector<int> edge_hist;
  };

  struct Option {
    int target = 0;
    int achieved = 0;
    std::vector<int> pendant_labels;  // stage order
  };

  RebuildSearch(int modulus, int cardinality,
                const std::vector<PeelStep>& peel)
      : k(modulus), p(cardinality), steps(peel) {
    plans.resize(steps.size());
  }

  bool extend(std::size_t depth, const State& state) {
    if (depth == steps.size()) {
      final_labels = state.labels;
      return true;
    }
    const PeelStep& step = steps[steps.size() - 1 - depth];
    const int n_prime = static_cast<int>(step.lift.size());

    std::vector<int> lifted(step.before.vertex_count(), -1);
    for (int j = 0; j < n_prime; ++j) lifted[step.lift[j]] = state.labels[j];

    ExtensionPlan plan;
    plan.leaf = step.leaf;
    if (!step.leaf.anchor_vertex)
      throw Error(Errc::internal_contradiction,
                  "re-attached edge has no anchor", plan.describe());
    plan.anchor_label = lifted[*step.leaf.anchor_vertex];
    const int a = n_prime % k;
    plan.residue_a = a;

    if (a > 0) {
      const int upper = n_prime / k + 1;
      for (int i = 0; i < k; ++i)
        if (state.vertex_hist[i] == upper) plan.upper_labels.push_back(i);
      if (static_cast<int>(plan.upper_labels.size()) != a)
        throw Error(Errc::internal_contradiction,
                    "histogram does not split into a upper labels",
                    plan.describe());
    }

    const int min_count =
        *std::min_element(state.edge_hist.begin(), state.edge_hist.end());
    std::vector<Option> options;

    if (p - 1 >= k - a) {
      std::vector<char> in_upper(k, 0);
      for (int i : plan.upper_labels) in_upper[i] = 1;
      for (int i = 0; i < k; ++i)
        if (!in_upper[i]) plan.first_block.push_back(i);

      const int rest = p - 1 - (k - a);
      plan.full_block_count = rest / k;
      plan.remainder_size = rest % k;

      std::vector<int> blocks = plan.first_block;
      for (int i = 0; i < k; ++i)
        blocks.insert(blocks.end(), plan.full_block_count, i);
      int sum = plan.anchor_label;
      for (int x : blocks) sum += x;

      if (plan.remainder_size > 0) {
        // Any least-used target is reachable: the remainder set solves for
        // every residue.
        for (int target = 0; target < k; ++target) {
          if (state.edge_hist[target] != min_count) continue;
          const int needed = ((target - sum) % k + k) % k;
          auto witness = distinct_subset_sum(k, plan.remainder_size, needed);
          Option option;
          option.target = target;
          option.achieved = target;
          option.pendant_labels = blocks;
          option.pendant_labels.insert(option.pendant_labels.end(),
                                       witness.elements.begin(),
                                       witness.elements.end());
          options.push_back(std::move(option));
        }
      } else {
        // The balanced fill fixes the edge label; accept it when the edge
        // balance survives (guaranteed on the p = 0 mod k route, where the
        // smaller hypertree's edge histogram is perfectly flat).
        Option option;
        option.target = sum % k;
        option.achieved = option.target;
        option.pendant_labels = blocks;
        if (state.edge_hist[option.achieved] == min_count)
          options.push_back(std::move(option));
      }
    } else {
      // p-1 < k-a: friendliness forces p-1 distinct labels from outside the
      // upper set, searched against every currently admissible edge label.
      plan.fallback = true;
      plan.remainder_size = p - 1;
      for (int target = 0; target < k; ++target) {
        if (state.edge_hist[target] != min_count) continue;
        const int needed = ((target - plan.anchor_label) % k + k) % k;
        for (auto& witness :
             enumerate_subset_sums(k, p - 1, needed, plan.upper_labels)) {
          Option option;
          option.target = target;
          option.achieved = target;
          option.pendant_labels = std::move(witness.elements);
          options.push_back(std::move(option));
        }
      }
    }

    for (auto& option : options) {
      if (++options_tried > kOptionCap)
        throw Error(Errc::internal_contradiction,
                    "construction search exceeded its option cap",
                    plan.describe());
      State next;
      next.labels = lifted;
      next.vertex_hist = state.vertex_hist;
      next.edge_hist = state.edge_hist;
      for (int idx = 0; idx < p - 1; ++idx) {
        next.labels[step.leaf.pendant_vertices[idx]] =
            option.pendant_labels[idx];
        ++next.vertex_hist[option.pendant_labels[idx]];
      }
      ++next.edge_hist[option.achieved];

      plan.target_edge_label = option.target;
      plan.achieved_edge_label = option.achieved;
      if (plan.fallback)
        plan.remainder_labels = option.pendant_labels;
      else if (plan.remainder_size > 0)
        plan.remainder_labels =
            std::vector<int>(option.pendant_labels.end() - plan.remainder_size,
                             option.pendant_labels.end());

      check_partial(step.before, next.labels, k, next.vertex_hist,
                    next.edge_hist, plan);
      plans[depth] = plan;
      if (extend(depth + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

ConstructionResult label_hypertree(const Hypertree& tree, int k) {
  if (k < 1) throw Error(Errc::invalid_label, "modulus must be at least 1");
  const int p = tree.edge_cardinality();
  if (!theorem_applies(p, k))
    throw Error(Errc::theorem_not_applicable,
                "no condition holds for p=" + std::to_string(p) +
                    ", k=" + std::to_string(k) +
                    "; use the brute-force labeler");

  // Peel leaf edges down to a single edge.
  std::vector<PeelStep> steps;
  Hypertree base = tree;
  while (base.edge_count() > 1) {
    auto leaf = find_removable_leaf_edge(base);
    auto removal = remove_leaf_edge(base, leaf);
    steps.push_back({base, leaf, removal.lift});
    base = *std::move(removal.remainder);
  }

  // Base edge: round-robin labels are friendly by construction and the lone
  // edge label is trivially balanced.
  std::vector<int> labels(base.vertex_count());
  std::vector<int> vertex_hist(k, 0), edge_hist(k, 0);
  int base_sum = 0;
  for (int v = 0; v < base.vertex_count(); ++v) {
    labels[v] = v % k;
    ++vertex_hist[labels[v]];
    base_sum += labels[v];
  }
  ++edge_hist[base_sum % k];

  RebuildSearch search(k, p, steps);
  RebuildSearch::State initial{std::move(labels), std::move(vertex_hist),
                               std::move(edge_hist)};
  if (!search.extend(0, initial))
    throw Error(Errc::internal_contradiction,
                "no extension sequence reaches a balanced labeling (" +
                    std::to_string(search.options_tried) + " options tried)");

  bool fallback_fired = false;
  std::vector<int> r_claim_violations;
  for (std::size_t i = 0; i < search.plans.size(); ++i) {
    const auto& plan = search.plans[i];
    if (plan.fallback) fallback_fired = true;
    if (!plan.fallback && plan.remainder_size == 0 && r_positive_claimed(p, k))
      r_claim_violations.push_back(static_cast<int>(i));
  }

  VertexLabeling labeling(k, search.final_labels);
  if (!is_k_cordial_labeling(tree, labeling))
    throw Error(Errc::internal_contradiction,
                "final labeling failed verification");
  return {std::move(labeling), fallback_fired, std::move(search.plans),
          std::move(r_claim_violations)};
}

namespace {

// Search state for the exhaustive labeler. The histograms update in O(1)
// per label change; deficits track how many assignments are still owed to
// labels below the floor, which prunes branches that can no longer even out.
struct BruteForce {
  const Hypertree& tree;
  int k, n, m;
  int vertex_cap, vertex_floor, edge_cap, edge_floor;
  bool fix_first;
  std::uint64_t budget;

  std::vector<int> order;                       // assignment order
  std::vector<std::vector<int>> completes_at;   // edges finished per position
  std::vector<std::vector<int>> realized;       // per-depth scratch
  std::vector<int> label_of;
  std::vector<int> vertex_count, edge_count;
  long long vertex_deficit, edge_deficit;
  int edges_done = 0;
  std::uint64_t nodes = 0;
  bool exceeded = false;

  BruteForce(const Hypertree& t, int modulus, std::uint64_t node_budget)
      : tree(t),
        k(modulus),
        n(t.vertex_count()),
        m(t.edge_count()),
        vertex_cap((n + k - 1) / k),
        vertex_floor(n / k),
        edge_cap((m + k - 1) / k),
        edge_floor(m / k),
        fix_first(k > 1 && std::gcd(t.edge_cardinality(), k) == 1),
        budget(node_budget),
        label_of(t.vertex_count(), -1),
        vertex_count(modulus, 0),
        edge_count(modulus, 0),
        vertex_deficit(static_cast<long long>(k) * vertex_floor),
        edge_deficit(static_cast<long long>(k) * edge_floor) {
    // Order vertices along a BFS over edges so edges complete early.
    std::vector<int> position(n, -1);
    std::vector<char> queued(m, 0);
    std::queue<int> frontier;
    frontier.push(0);
    queued[0] = 1;
    while (!frontier.empty()) {
      int j = frontier.front();
      frontier.pop();
      for (int v : tree.edges()[j]) {
        if (position[v] >= 0) continue;
        position[v] = static_cast<int>(order.size());
        order.push_back(v);
      }
      for (int v : tree.edges()[j])
        for (int j2 : tree.incident_edges(v))
          if (!queued[j2]) {
            queued[j2] = 1;
            frontier.push(j2);
          }
    }
    completes_at.assign(n, {});
    for (int j = 0; j < m; ++j) {
      int last = 0;
      for (int v : tree.edges()[j]) last = std::max(last, position[v]);
      completes_at[last].push_back(j);
    }
    realized.assign(n, {});
  }

  bool search(int pos) {
    if (pos == n) return true;
    const int vertex = order[pos];
    const int first = 0;
    const int last = (pos == 0 && fix_first) ? 0 : k - 1;
    for (int label = first; label <= last; ++label) {
      if (++nodes > budget) {
        exceeded = true;
        return false;
      }
      if (vertex_count[label] == vertex_cap) continue;

      label_of[vertex] = label;
      ++vertex_count[label];
      const int vertex_delta = vertex_count[label] <= vertex_floor ? 1 : 0;
      vertex_deficit -= vertex_delta;

      bool feasible = vertex_deficit <= n - pos - 1;
      auto& done_here = realized[pos];
      done_here.clear();
      if (feasible) {
        for (int j : completes_at[pos]) {
          int sum = 0;
          for (int u : tree.edges()[j]) sum += label_of[u];
          int value = sum % k;
          done_here.push_back(value);
          ++edge_count[value];
          ++edges_done;
          if (edge_count[value] <= edge_floor) --edge_deficit;
          if (edge_count[value] > edge_cap) {
            feasible = false;
            break;
          }
        }
        if (feasible && edge_deficit > m - edges_done) feasible = false;
      }

      if (feasible && search(pos + 1)) return true;

      for (auto it = done_here.rbegin(); it != done_here.rend(); ++it) {
        int value = *it;
        if (edge_count[value] <= edge_floor) ++edge_deficit;
        --edge_count[value];
        --edges_done;
      }
      vertex_deficit += vertex_delta;
      --vertex_count[label];
      label_of[vertex] = -1;
      if (exceeded) return false;
    }
    return false;
  }
};

}  // namespace

BruteForceResult brute_force_label(const Hypertree& tree, int k,
                                   std::uint64_t node_budget) {
  if (k < 1) throw Error(Errc::invalid_label, "modulus must be at least 1");
  if (node_budget == 0)
    throw Error(Errc::invalid_config, "node budget must be positive");

  BruteForce state(tree, k, node_budget);
  BruteForceResult result;
  if (state.search(0)) {
    VertexLabeling labeling(k, state.label_of);
    if (!is_k_cordial_labeling(tree, labeling))
      throw Error(Errc::internal_contradiction,
                  "search produced a non-cordial labeling");
    result.status = SearchStatus::found;
    result.labeling = std::move(labeling);
  } else {
    result.status = state.exceeded ? SearchStatus::budget_exceeded
                                   : SearchStatus::none_exists;
  }
  result.nodes_explored = state.nodes;
  return result;
}

}  // namespace hypercordial
