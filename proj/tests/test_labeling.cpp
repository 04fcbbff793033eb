#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hypercordial/hypertree.hpp"
#include "hypercordial/labeling.hpp"

using namespace hypercordial;

TEST_CASE("induced edge labels are modular sums") {
  auto single = Hypertree::validate({{0, 1, 2}}, 3);
  auto s = induced_edge_labels(single, VertexLabeling(2, {0, 0, 1}));
  CHECK(s.edge_labels == std::vector<int>{1});

  auto path = Hypertree::validate({{0, 1, 2}, {2, 3, 4}}, 5);
  auto labels = induced_edge_labels(path, VertexLabeling(5, {0, 1, 2, 3, 4}));
  CHECK(labels.edge_labels == std::vector<int>{3, 4});  // 0+1+2; 2+3+4 = 9
  CHECK(labels.histogram == std::vector<int>{0, 0, 0, 1, 1});
}

TEST_CASE("modulus one collapses every edge label to zero") {
  auto path = Hypertree::validate({{0, 1, 2}, {2, 3, 4}}, 5);
  auto s = induced_edge_labels(path, VertexLabeling(1, {0, 0, 0, 0, 0}));
  CHECK(s.edge_labels == std::vector<int>{0, 0});
  CHECK(is_k_cordial_labeling(path, VertexLabeling(1, {0, 0, 0, 0, 0})));
}

TEST_CASE("friendliness is histogram spread at most one") {
  CHECK(is_k_friendly(VertexLabeling(2, {0, 0, 0, 1, 1})));       // 3 vs 2
  CHECK_FALSE(is_k_friendly(VertexLabeling(2, {0, 0, 0, 0, 1}))); // 4 vs 1
  CHECK(is_k_friendly(VertexLabeling(3, {0, 0, 1, 1, 2, 2})));    // 2,2,2
}

TEST_CASE("cordiality needs both histograms balanced") {
  auto single = Hypertree::validate({{0, 1, 2}}, 3);
  CHECK(is_k_cordial_labeling(single, VertexLabeling(2, {0, 0, 1})));

  auto path = Hypertree::validate({{0, 1}, {1, 2}, {2, 3}}, 4);
  // (0,1,0,1): friendly, edge labels (1,1,1) -> counts (0,3)
  CHECK(is_k_friendly(VertexLabeling(2, {0, 1, 0, 1})));
  CHECK_FALSE(is_k_cordial_labeling(path, VertexLabeling(2, {0, 1, 0, 1})));
  // (0,1,1,0): edge labels (1,0,1) -> counts (1,2)
  CHECK(is_k_cordial_labeling(path, VertexLabeling(2, {0, 1, 1, 0})));
}

TEST_CASE("labeling construction validates its input") {
  CHECK_THROWS_AS(VertexLabeling(2, {0, 2, 1}), Error);
  CHECK_THROWS_AS(VertexLabeling(2, {0, -1}), Error);
  CHECK_THROWS_AS(VertexLabeling(0, {}), Error);
  auto path = Hypertree::validate({{0, 1}, {1, 2}}, 3);
  CHECK_THROWS_AS(induced_edge_labels(path, VertexLabeling(2, {0, 1})), Error);
}

TEST_CASE("histogram bookkeeping matches the labels") {
  VertexLabeling c(4, {3, 3, 0, 1, 0});
  CHECK(c.histogram() == std::vector<int>{2, 1, 0, 2});
  CHECK(std::accumulate(c.histogram().begin(), c.histogram().end(), 0) == 5);
}

TEST_CASE("global shift permutes histograms and preserves cordiality") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    int p = 2 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 7);
    auto t = random_hypertree(p, m, rng());
    std::vector<int> labels(t.vertex_count());
    for (auto& x : labels) x = static_cast<int>(rng() % k);
    int shift = static_cast<int>(rng() % k);

    VertexLabeling base(k, labels);
    std::vector<int> shifted_labels = labels;
    for (auto& x : shifted_labels) x = (x + shift) % k;
    VertexLabeling shifted(k, shifted_labels);

    CHECK(is_k_friendly(base) == is_k_friendly(shifted));

    auto base_edges = induced_edge_labels(t, base);
    auto shifted_edges = induced_edge_labels(t, shifted);
    int edge_shift = (p * shift) % k;
    for (int j = 0; j < t.edge_count(); ++j)
      CHECK(shifted_edges.edge_labels[j] ==
            (base_edges.edge_labels[j] + edge_shift) % k);
    CHECK(is_k_cordial_labeling(t, base) == is_k_cordial_labeling(t, shifted));
  }
}

TEST_CASE("vertex permutations leave both histograms unchanged") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int p = 2 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 5);
    int k = 2 + static_cast<int>(rng() % 6);
    auto t = random_hypertree(p, m, rng());
    std::vector<int> labels(t.vertex_count());
    for (auto& x : labels) x = static_cast<int>(rng() % k);

    std::vector<int> perm(t.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::vector<int>> edges;
    for (const auto& e : t.edges()) {
      std::vector<int> f;
      for (int v : e) f.push_back(perm[v]);
      edges.push_back(std::move(f));
    }
    auto tp = Hypertree::validate(std::move(edges), t.vertex_count());
    std::vector<int> moved(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) moved[perm[v]] = labels[v];

    VertexLabeling c(k, labels), cp(k, moved);
    CHECK(c.histogram() == cp.histogram());
    auto h = induced_edge_labels(t, c).histogram;
    auto hp = induced_edge_labels(tp, cp).histogram;
    CHECK(h == hp);
  }
}
