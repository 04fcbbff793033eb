#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "hypercordial/cordial.hpp"
#include "hypercordial/explore.hpp"
#include "hypercordial/hypertree.hpp"
#include "hypercordial/labeling.hpp"
#include "hypercordial/serialize.hpp"
#include "hypercordial/zk.hpp"

namespace hc = hypercordial;
using nlohmann::ordered_json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitDomainNegative = 1;
constexpr int kExitUsage = 2;

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// "A..B" or a single integer "N" (meaning N..N).
IntRange parse_range(const std::string& text) {
  auto fail = [&] {
    throw hc::Error(hc::Errc::parse_error,
                    "range '" + text + "' is not 'N' or 'A..B'");
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int value = std::stoi(s, &used);
      if (used != s.size()) fail();
      return value;
    } catch (const std::exception&) {
      fail();
      return 0;
    }
  };
  auto dots = text.find("..");
  IntRange range;
  if (dots == std::string::npos) {
    range.lo = range.hi = to_int(text);
  } else {
    range.lo = to_int(text.substr(0, dots));
    range.hi = to_int(text.substr(dots + 2));
  }
  return range;
}

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw hc::Error(hc::Errc::parse_error,
                      "'" + item + "' is not an integer");
    }
  }
  return out;
}

std::string join_csv(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw hc::Error(hc::Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

hc::Hypertree load_one(const std::string& path) {
  return hc::read_hypertree_text(read_file(path));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_label(const std::string& input, int k, const std::string& method,
              std::uint64_t budget, const std::string& format) {
  auto tree = load_one(input);
  bool use_theorem = method == "theorem" ||
                     (method == "auto" && hc::theorem_applies(
                                              tree.edge_cardinality(), k));
  if (use_theorem) {
    auto result = hc::label_hypertree(tree, k);  // throws if not applicable
    if (format == "plain") {
      std::cout << join_csv(result.labeling.labels()) << "\n";
    } else {
      auto j = hc::labeling_json(tree, result.labeling);
      j["method"] = "theorem";
      j["fallback_fired"] = result.fallback_fired;
      emit(j);
    }
    return kExitSuccess;
  }

  auto result = hc::brute_force_label(tree, k, budget);
  if (result.status == hc::SearchStatus::found) {
    if (format == "plain") {
      std::cout << join_csv(result.labeling->labels()) << "\n";
    } else {
      auto j = hc::labeling_json(tree, *result.labeling);
      j["method"] = "brute";
      j["fallback_fired"] = false;
      emit(j);
    }
    return kExitSuccess;
  }
  const char* reason = result.status == hc::SearchStatus::none_exists
                           ? "none_exists"
                           : "budget_exceeded";
  if (format == "plain") {
    std::cout << reason << "\n";
  } else {
    ordered_json j;
    j["k"] = k;
    j["method"] = "brute";
    j["found"] = false;
    j["reason"] = reason;
    emit(j);
  }
  return kExitDomainNegative;
}

int run_verify(const std::string& input, const std::string& labels_csv, int k,
               const std::string& format) {
  auto tree = load_one(input);
  hc::VertexLabeling labeling(k, parse_csv_ints(labels_csv));
  bool cordial = hc::is_k_cordial_labeling(tree, labeling);
  if (format == "plain")
    std::cout << (cordial ? "true" : "false") << "\n";
  else
    emit(hc::labeling_json(tree, labeling));
  return cordial ? kExitSuccess : kExitDomainNegative;
}

int run_zk(int k, int l, int a, const std::string& forbid,
           const std::string& format) {
  auto forbidden = parse_csv_ints(forbid);
  try {
    auto witness = forbidden.empty()
                       ? hc::distinct_subset_sum(k, l, a)
                       : hc::distinct_subset_sum_avoiding(k, l, a, forbidden);
    if (format == "json") {
      ordered_json j;
      j["k"] = k;
      j["l"] = l;
      j["a"] = a;
      j["forbidden"] = forbidden;
      j["feasible"] = true;
      j["elements"] = witness.elements;
      emit(j);
    } else {
      std::cout << join_csv(witness.elements) << "\n";
    }
    return kExitSuccess;
  } catch (const hc::Error& e) {
    if (e.code() != hc::Errc::infeasible) throw;
    if (format == "json") {
      ordered_json j;
      j["k"] = k;
      j["l"] = l;
      j["a"] = a;
      j["forbidden"] = forbidden;
      j["feasible"] = false;
      emit(j);
    } else {
      std::cout << "infeasible\n";
    }
    return kExitDomainNegative;
  }
}

int run_random(int p, int m, std::uint64_t seed, const std::string& out_path) {
  auto tree = hc::random_hypertree(p, m, seed);
  std::string text = hc::write_hypertree_text(tree);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw hc::Error(hc::Errc::parse_error, "cannot write '" + out_path + "'");
    out << text;
  }
  return kExitSuccess;
}

int run_enumerate(int p, int m, const std::string& out_dir,
                  const std::string& format) {
  auto trees = hc::enumerate_hypertrees(p, m);
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    std::ostringstream name;
    name << "p" << p << "_m" << m << "_" << std::setw(4) << std::setfill('0')
         << i << ".ht";
    auto path = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw hc::Error(hc::Errc::parse_error,
                      "cannot write '" + path.string() + "'");
    out << hc::write_hypertree_text(trees[i]);
  }
  if (format == "plain") {
    std::cout << trees.size() << "\n";
  } else {
    ordered_json j;
    j["p"] = p;
    j["m"] = m;
    j["count"] = trees.size();
    emit(j);
  }
  return kExitSuccess;
}

int run_explore(const std::string& p_range, const std::string& m_range,
                const std::string& k_range, std::uint64_t budget, int jobs,
                const std::string& out_path, const std::string& format) {
  auto p = parse_range(p_range);
  auto m = parse_range(m_range);
  auto k = parse_range(k_range);
  hc::ExploreConfig config;
  config.p_lo = p.lo;
  config.p_hi = p.hi;
  config.m_lo = m.lo;
  config.m_hi = m.hi;
  config.k_lo = k.lo;
  config.k_hi = k.hi;
  config.node_budget = budget;
  config.jobs = jobs;
  auto report = hc::explore_conjecture(config);
  auto j = hc::report_json(report);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw hc::Error(hc::Errc::parse_error, "cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
  if (format == "plain") {
    for (const auto& cell : report.cells)
      std::cout << "p=" << cell.p << " m=" << cell.m << " k=" << cell.k
                << " cordial=" << cell.cordial
                << " non_cordial=" << cell.non_cordial
                << " exceeded=" << cell.exceeded << "\n";
  } else {
    emit(j);
  }
  return report.counterexamples.empty() ? kExitSuccess : kExitDomainNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-cordial labelings of p-uniform hypertrees"};
  app.require_subcommand(1);

  std::string input, labels_csv, forbid, out_path, out_dir;
  std::string method = "auto";
  std::string format = "json";
  std::string p_range = "2..2", m_range = "1..1", k_range = "2..2";
  int k = 2, l = 1, a = 0, p = 2, m = 1, jobs = 1;
  std::uint64_t seed = 0, budget = hc::kDefaultNodeBudget;

  auto* label = app.add_subcommand("label", "Construct a k-cordial labeling");
  label->add_option("--input", input, "hypertree file")->required();
  label->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);
  label->add_option("--method", method, "labeling method")
      ->check(CLI::IsMember({"auto", "theorem", "brute"}));
  label->add_option("--budget", budget, "search node budget (brute method)");
  label->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));

  auto* verify = app.add_subcommand("verify", "Check a labeling for k-cordiality");
  verify->add_option("--input", input, "hypertree file")->required();
  verify->add_option("--labels", labels_csv, "comma-separated vertex labels")
      ->required();
  verify->add_option("--k", k, "modulus")->required()->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));

  auto* zk = app.add_subcommand(
      "zk", "Find distinct elements of Z_k with a prescribed sum");
  zk->add_option("--k", k, "modulus")->required();
  zk->add_option("--l", l, "subset size")->required();
  zk->add_option("--a", a, "target sum")->required();
  zk->add_option("--forbid", forbid, "comma-separated excluded values");
  std::string zk_format = "plain";
  zk->add_option("--format", zk_format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));

  auto* random = app.add_subcommand("random", "Generate a random hypertree");
  random->add_option("--p", p, "edge cardinality")->required();
  random->add_option("--m", m, "edge count")->required();
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--out", out_path, "output file (default stdout)");

  auto* enumerate =
      app.add_subcommand("enumerate", "Write all hypertrees with m edges");
  enumerate->add_option("--p", p, "edge cardinality")->required();
  enumerate->add_option("--m", m, "edge count")->required();
  enumerate->add_option("--out", out_dir, "output directory")->required();
  enumerate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));

  auto* explore = app.add_subcommand(
      "explore", "Brute-force cordiality sweep over small hypertrees");
  explore->add_option("--p", p_range, "uniformity range A..B")->required();
  explore->add_option("--m", m_range, "edge count range A..B")->required();
  explore->add_option("--k", k_range, "modulus range A..B")->required();
  explore->add_option("--budget", budget, "per-instance node budget");
  explore->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  explore->add_option("--out", out_path, "also write the report here");
  explore->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "plain"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (label->parsed()) return run_label(input, k, method, budget, format);
    if (verify->parsed()) return run_verify(input, labels_csv, k, format);
    if (zk->parsed()) return run_zk(k, l, a, forbid, zk_format);
    if (random->parsed()) return run_random(p, m, seed, out_path);
    if (enumerate->parsed()) return run_enumerate(p, m, out_dir, format);
    if (explore->parsed())
      return run_explore(p_range, m_range, k_range, budget, jobs, out_path,
                         format);
  } catch (const hc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.detail().empty()) std::cerr << "  " << e.detail() << "\n";
    switch (e.code()) {
      case hc::Errc::infeasible:
      case hc::Errc::theorem_not_applicable:
        return kExitDomainNegative;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
