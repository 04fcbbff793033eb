#include "hypercordial/explore.hpp"

#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "hypercordial/labeling.hpp"

namespace hypercordial {

namespace {

struct Instance {
  int p, m, k;
  const Hypertree* tree;
};

struct InstanceOutcome {
  SearchStatus status = SearchStatus::none_exists;
  bool construction_checked = false;
  bool construction_ok = true;
  std::string failure;
};

void run_instance(const Instance& instance, std::uint64_t budget,
                  InstanceOutcome& outcome) {
  outcome.status = brute_force_label(*instance.tree, instance.k, budget).status;
  if (!theorem_applies(instance.p, instance.k)) return;
  outcome.construction_checked = true;
  try {
    auto result = label_hypertree(*instance.tree, instance.k);
    if (!is_k_cordial_labeling(*instance.tree, result.labeling)) {
      outcome.construction_ok = false;
      outcome.failure = "constructed labeling failed verification";
    }
  } catch (const std::exception& e) {
    outcome.construction_ok = false;
    outcome.failure = e.what();
  }
}

}  // namespace

ExploreReport explore_conjecture(const ExploreConfig& config) {
  if (config.p_lo < 2 || config.p_lo > config.p_hi)
    throw Error(Errc::invalid_config, "uniformity range must satisfy 2 <= lo <= hi");
  if (config.m_lo < 1 || config.m_lo > config.m_hi)
    throw Error(Errc::invalid_config, "size range must satisfy 1 <= lo <= hi");
  if (config.k_lo < 1 || config.k_lo > config.k_hi)
    throw Error(Errc::invalid_config, "modulus range must satisfy 1 <= lo <= hi");
  if (config.node_budget == 0)
    throw Error(Errc::invalid_config, "budget must be positive");
  if (config.jobs < 1)
    throw Error(Errc::invalid_config, "jobs must be positive");

  // Enumerate each (p, m) once; instances borrow the trees.
  std::map<std::pair<int, int>, std::vector<Hypertree>> families;
  for (int p = config.p_lo; p <= config.p_hi; ++p)
    for (int m = config.m_lo; m <= config.m_hi; ++m)
      families[{p, m}] = enumerate_hypertrees(p, m);

  std::vector<Instance> instances;
  for (int p = config.p_lo; p <= config.p_hi; ++p)
    for (int m = config.m_lo; m <= config.m_hi; ++m)
      for (int k = config.k_lo; k <= config.k_hi; ++k)
        for (const auto& tree : families[{p, m}])
          instances.push_back({p, m, k, &tree});

  std::vector<InstanceOutcome> outcomes(instances.size());
  if (config.jobs == 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      run_instance(instances[i], config.node_budget, outcomes[i]);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= instances.size()) break;
        run_instance(instances[i], config.node_budget, outcomes[i]);
      }
    };
    std::size_t thread_count =
        std::min<std::size_t>(config.jobs, instances.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in instance order so the report is independent of scheduling.
  ExploreReport report;
  report.config = config;
  report.instances = instances.size();
  std::map<std::tuple<int, int, int>, ExploreCell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& instance = instances[i];
    auto& cell = cells[{instance.p, instance.m, instance.k}];
    cell.p = instance.p;
    cell.m = instance.m;
    cell.k = instance.k;
    switch (outcomes[i].status) {
      case SearchStatus::found:
        ++cell.cordial;
        break;
      case SearchStatus::none_exists:
        ++cell.non_cordial;
        report.counterexamples.push_back(
            {instance.p, instance.m, instance.k, *instance.tree});
        break;
      case SearchStatus::budget_exceeded:
        ++cell.exceeded;
        break;
    }
    if (outcomes[i].construction_checked && !outcomes[i].construction_ok)
      report.construction_failures.push_back({instance.p, instance.m,
                                              instance.k, *instance.tree,
                                              outcomes[i].failure});
  }
  for (auto& [key, cell] : cells) report.cells.push_back(cell);
  return report;
}

}  // namespace hypercordial
