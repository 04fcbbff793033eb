#include "hypercordial/hypertree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace hypercordial {

namespace {

std::string edge_to_string(const std::vector<int>& edge) {
  std::string s;
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(edge[i]);
  }
  return s;
}

// Deterministic across platforms: mt19937_64 is fully specified, and the
// rejection loop avoids the implementation-defined distribution classes.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

Hypertree::Hypertree(int n, int p, std::vector<std::vector<int>> edges)
    : n_(n), p_(p), edges_(std::move(edges)), incidence_(n) {
  for (std::size_t j = 0; j < edges_.size(); ++j)
    for (int v : edges_[j]) incidence_[v].push_back(static_cast<int>(j));
}

Hypertree Hypertree::validate(std::vector<std::vector<int>> raw_edges,
                              int vertex_count) {
  if (raw_edges.empty())
    throw Error(Errc::empty_hypertree, "a hypertree needs at least one edge");
  if (vertex_count < 1)
    throw Error(Errc::vertex_out_of_range, "vertex count must be positive");

  const int p = static_cast<int>(raw_edges[0].size());
  if (p < 2)
    throw Error(Errc::non_uniform, "edge cardinality must be at least 2");

  for (auto& edge : raw_edges) {
    if (static_cast<int>(edge.size()) != p)
      throw Error(Errc::non_uniform,
                  "edge {" + edge_to_string(edge) + "} has cardinality " +
                      std::to_string(edge.size()) + ", expected " +
                      std::to_string(p));
    for (int v : edge)
      if (v < 0 || v >= vertex_count)
        throw Error(Errc::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " not in 0.." +
                        std::to_string(vertex_count - 1));
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      throw Error(Errc::duplicate_vertex_in_edge,
                  "edge {" + edge_to_string(edge) + "} repeats a vertex");
  }

  std::sort(raw_edges.begin(), raw_edges.end());
  if (std::adjacent_find(raw_edges.begin(), raw_edges.end()) != raw_edges.end())
    throw Error(Errc::duplicate_edge, "duplicate edge in input");

  const int m = static_cast<int>(raw_edges.size());

  // Pairwise intersections: two edges sharing two vertices already close a
  // cycle, independently of the order formula below.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> common;
      std::set_intersection(raw_edges[i].begin(), raw_edges[i].end(),
                            raw_edges[j].begin(), raw_edges[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1)
        throw Error(Errc::has_cycle,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) +
                        " share " + std::to_string(common.size()) +
                        " vertices");
    }
  }

  // Connectivity over the bipartite incidence structure.
  std::vector<std::vector<int>> incidence(vertex_count);
  for (int j = 0; j < m; ++j)
    for (int v : raw_edges[j]) incidence[v].push_back(j);

  std::vector<char> vertex_seen(vertex_count, 0), edge_seen(m, 0);
  std::queue<int> frontier;
  frontier.push(raw_edges[0][0]);
  vertex_seen[raw_edges[0][0]] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int j : incidence[v]) {
      if (edge_seen[j]) continue;
      edge_seen[j] = 1;
      for (int u : raw_edges[j]) {
        if (vertex_seen[u]) continue;
        vertex_seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  if (reached != vertex_count)
    throw Error(Errc::disconnected,
                "only " + std::to_string(reached) + " of " +
                    std::to_string(vertex_count) + " vertices are reachable");

  // Connected and n < (p-1)m + 1 means some closed walk exists.
  if (vertex_count != (p - 1) * m + 1)
    throw Error(Errc::has_cycle,
                "order formula violated: n=" + std::to_string(vertex_count) +
                    ", (p-1)m+1=" + std::to_string((p - 1) * m + 1));

  return Hypertree(vertex_count, p, std::move(raw_edges));
}

LeafEdgeDecomposition find_removable_leaf_edge(const Hypertree& tree) {
  if (tree.edge_count() == 0)
    throw Error(Errc::empty_hypertree, "no edges to remove");

  const int p = tree.edge_cardinality();
  for (int j = 0; j < tree.edge_count(); ++j) {
    LeafEdgeDecomposition leaf;
    leaf.edge_index = j;
    for (int v : tree.edges()[j]) {
      if (tree.degree(v) == 1)
        leaf.pendant_vertices.push_back(v);
      else
        leaf.anchor_vertex = v;
    }
    if (static_cast<int>(leaf.pendant_vertices.size()) >= p - 1) {
      if (tree.edge_count() == 1) leaf.anchor_vertex.reset();
      return leaf;
    }
  }
  throw Error(Errc::internal_contradiction,
              "no pendant edge found in a valid hypertree");
}

LeafRemoval remove_leaf_edge(const Hypertree& tree,
                             const LeafEdgeDecomposition& leaf) {
  if (leaf.edge_index < 0 || leaf.edge_index >= tree.edge_count())
    throw Error(Errc::vertex_out_of_range, "leaf edge index out of range");
  for (int v : leaf.pendant_vertices)
    if (tree.degree(v) != 1)
      throw Error(Errc::internal_contradiction,
                  "pendant vertex " + std::to_string(v) +
                      " does not have degree 1");

  if (tree.edge_count() == 1) return {};

  std::vector<char> dropped(tree.vertex_count(), 0);
  for (int v : leaf.pendant_vertices) dropped[v] = 1;

  LeafRemoval removal;
  std::vector<int> old_to_new(tree.vertex_count(), -1);
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (dropped[v]) continue;
    old_to_new[v] = static_cast<int>(removal.lift.size());
    removal.lift.push_back(v);
  }

  std::vector<std::vector<int>> edges;
  for (int j = 0; j < tree.edge_count(); ++j) {
    if (j == leaf.edge_index) continue;
    std::vector<int> edge;
    for (int v : tree.edges()[j]) edge.push_back(old_to_new[v]);
    edges.push_back(std::move(edge));
  }
  removal.remainder = Hypertree::validate(
      std::move(edges), tree.vertex_count() - (tree.edge_cardinality() - 1));
  return removal;
}

Hypertree attach_edge(const Hypertree& tree, int at_vertex) {
  if (at_vertex < 0 || at_vertex >= tree.vertex_count())
    throw Error(Errc::vertex_out_of_range, "attachment vertex out of range");
  auto edges = tree.edges();
  std::vector<int> fresh{at_vertex};
  for (int i = 0; i < tree.edge_cardinality() - 1; ++i)
    fresh.push_back(tree.vertex_count() + i);
  edges.push_back(std::move(fresh));
  return Hypertree::validate(std::move(edges),
                             tree.vertex_count() + tree.edge_cardinality() - 1);
}

namespace {

// The bipartite incidence graph of a hypertree is a tree on n + m nodes
// (vertex nodes 0..n-1, edge nodes n..n+m-1), so canonization is classic
// rooted-tree canonization at the tree center.
struct IncidenceTree {
  int n, m;
  std::vector<std::vector<int>> adj;

  explicit IncidenceTree(const Hypertree& t)
      : n(t.vertex_count()), m(t.edge_count()), adj(n + m) {
    for (int j = 0; j < m; ++j) {
      for (int v : t.edges()[j]) {
        adj[v].push_back(n + j);
        adj[n + j].push_back(v);
      }
    }
  }

  std::vector<int> centers() const {
    int total = n + m;
    std::vector<int> deg(total), order;
    for (int u = 0; u < total; ++u) deg[u] = static_cast<int>(adj[u].size());
    std::vector<int> layer;
    std::vector<char> removed(total, 0);
    for (int u = 0; u < total; ++u)
      if (deg[u] <= 1) layer.push_back(u);
    int remaining = total;
    while (remaining > 2) {
      std::vector<int> next;
      for (int u : layer) {
        removed[u] = 1;
        --remaining;
        for (int w : adj[u])
          if (!removed[w] && --deg[w] == 1) next.push_back(w);
      }
      layer = std::move(next);
    }
    std::vector<int> centers;
    for (int u = 0; u < total; ++u)
      if (!removed[u]) centers.push_back(u);
    return centers;
  }

  // Relabels by a DFS that orders children by their AHU subtree encodings,
  // computed bottom-up for the given root. Sibling subtrees with equal
  // encodings are isomorphic, so any order among them rebuilds the identical
  // edge list.
  Hypertree rebuild(int root) const {
    const int total = n + m;
    std::vector<int> parent(total, -1), bfs_order;
    bfs_order.reserve(total);
    bfs_order.push_back(root);
    for (std::size_t i = 0; i < bfs_order.size(); ++i) {
      int node = bfs_order[i];
      for (int w : adj[node]) {
        if (w == parent[node]) continue;
        parent[w] = node;
        bfs_order.push_back(w);
      }
    }

    std::vector<std::string> enc(total);
    for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
      int node = *it;
      std::vector<std::string> kids;
      for (int w : adj[node])
        if (w != parent[node]) kids.push_back(enc[w]);
      std::sort(kids.begin(), kids.end());
      std::string s(1, node < n ? 'v' : 'e');
      s += '(';
      for (const auto& k : kids) s += k;
      s += ')';
      enc[node] = std::move(s);
    }

    std::vector<int> new_vertex_id(n, -1);
    std::vector<std::vector<int>> edge_members(m);
    int next_vertex = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      if (node < n) {
        new_vertex_id[node] = next_vertex++;
        if (parent[node] >= 0)
          edge_members[parent[node] - n].push_back(new_vertex_id[node]);
      } else if (parent[node] >= 0) {
        edge_members[node - n].push_back(new_vertex_id[parent[node]]);
      }
      std::vector<std::pair<const std::string*, int>> kids;
      for (int w : adj[node])
        if (w != parent[node]) kids.emplace_back(&enc[w], w);
      std::sort(kids.begin(), kids.end(),
                [](const auto& a, const auto& b) { return *a.first < *b.first; });
      // push in reverse so the lexicographically first child pops first
      for (auto it = kids.rbegin(); it != kids.rend(); ++it)
        stack.push_back(it->second);
    }

    std::vector<std::vector<int>> edges;
    for (auto& e : edge_members) {
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
    return Hypertree::validate(std::move(edges), n);
  }
};

}  // namespace

Hypertree canonical_form(const Hypertree& tree) {
  IncidenceTree inc(tree);
  std::optional<Hypertree> best;
  for (int root : inc.centers()) {
    Hypertree candidate = inc.rebuild(root);
    if (!best || candidate.edges() < best->edges()) best = std::move(candidate);
  }
  return *best;
}

bool isomorphic(const Hypertree& a, const Hypertree& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.edge_cardinality() != b.edge_cardinality())
    return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Hypertree> enumerate_hypertrees(int p, int m) {
  if (p < 2)
    throw Error(Errc::non_uniform, "edge cardinality must be at least 2");
  if (m < 1) throw Error(Errc::empty_hypertree, "edge count must be positive");

  std::vector<int> base(p);
  for (int i = 0; i < p; ++i) base[i] = i;
  std::vector<Hypertree> level{Hypertree::validate({base}, p)};

  for (int step = 2; step <= m; ++step) {
    std::map<std::string, Hypertree> next;
    for (const auto& tree : level) {
      for (int v = 0; v < tree.vertex_count(); ++v) {
        Hypertree grown = canonical_form(attach_edge(tree, v));
        next.emplace(write_hypertree_text(grown), grown);
      }
    }
    level.clear();
    for (auto& [text, tree] : next) level.push_back(std::move(tree));
  }
  return level;
}

Hypertree random_hypertree(int p, int m, std::uint64_t seed) {
  if (p < 2)
    throw Error(Errc::non_uniform, "edge cardinality must be at least 2");
  if (m < 1) throw Error(Errc::empty_hypertree, "edge count must be positive");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> edges;
  int n = p;
  std::vector<int> first(p);
  for (int i = 0; i < p; ++i) first[i] = i;
  edges.push_back(std::move(first));
  for (int j = 1; j < m; ++j) {
    int at = static_cast<int>(uniform_below(rng, n));
    std::vector<int> edge{at};
    for (int i = 0; i < p - 1; ++i) edge.push_back(n + i);
    n += p - 1;
    edges.push_back(std::move(edge));
  }
  return Hypertree::validate(std::move(edges), n);
}

std::string write_hypertree_text(const Hypertree& tree) {
  std::string out = std::to_string(tree.edge_cardinality()) + ' ' +
                    std::to_string(tree.edge_count()) + ' ' +
                    std::to_string(tree.vertex_count()) + '\n';
  for (const auto& edge : tree.edges()) out += edge_to_string(edge) + '\n';
  return out;
}

namespace {

std::vector<long long> parse_int_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "not an integer: '" + token + "'");
    }
  }
  return out;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

Hypertree parse_block(const std::vector<std::string>& lines) {
  auto header = parse_int_line(lines[0]);
  if (header.size() != 3)
    throw Error(Errc::parse_error,
                "header must be 'p m n', got '" + lines[0] + "'");
  long long p = header[0], m = header[1], n = header[2];
  if (p < 1 || m < 1 || n < 1 || m > 1'000'000 || n > 100'000'000)
    throw Error(Errc::parse_error, "header out of range: '" + lines[0] + "'");
  if (static_cast<long long>(lines.size()) != m + 1)
    throw Error(Errc::parse_error,
                "expected " + std::to_string(m) + " edge lines, got " +
                    std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> edges;
  for (long long j = 1; j <= m; ++j) {
    auto row = parse_int_line(lines[j]);
    if (static_cast<long long>(row.size()) != p)
      throw Error(Errc::parse_error,
                  "edge line '" + lines[j] + "' must have " +
                      std::to_string(p) + " vertex ids");
    edges.emplace_back(row.begin(), row.end());
  }
  return Hypertree::validate(std::move(edges), static_cast<int>(n));
}

}  // namespace

std::vector<Hypertree> read_hypertree_blocks(const std::string& text) {
  std::vector<Hypertree> trees;
  std::vector<std::string> block;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    if (!block.empty()) {
      trees.push_back(parse_block(block));
      block.clear();
    }
  };
  while (std::getline(in, line)) {
    if (blank(line))
      flush();
    else
      block.push_back(line);
  }
  flush();
  if (trees.empty()) throw Error(Errc::parse_error, "no hypertree in input");
  return trees;
}

Hypertree read_hypertree_text(const std::string& text) {
  auto trees = read_hypertree_blocks(text);
  if (trees.size() != 1)
    throw Error(Errc::parse_error, "expected exactly one hypertree, found " +
                                       std::to_string(trees.size()));
  return trees[0];
}

}  // namespace hypercordial
