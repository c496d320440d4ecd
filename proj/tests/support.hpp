#ifndef BILACE_TESTS_SUPPORT_HPP
#define BILACE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "bilace/graph.hpp"
#include "bilace/matching.hpp"
#include "bilace/pipeline.hpp"
#include "bilace/tree.hpp"

namespace testing {

using namespace bilace;

inline Graph labelled(std::size_t n, std::vector<Edge> edges, const std::string& prefix) {
  Graph g(n, edges);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  g.set_labels(std::move(labels));
  return g;
}

/// p1 - p2 - ... - pn
inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return labelled(n, e, "p");
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return labelled(n, e, "p");
}

/// Centre 0, leaves 1..k.
inline Graph star_graph(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

inline Graph k2() { return Graph(2, {Edge(0, 1)}); }

/// Centre pair x=0,y=1; y-v1 (2), v1-w1 (3); x-a1 (4), a1-b1 (5).
struct StarOfPairs {
  static constexpr Vertex x = 0, y = 1, v1 = 2, w1 = 3, a1 = 4, b1 = 5;
  Graph g{6, {Edge(x, y), Edge(y, v1), Edge(v1, w1), Edge(x, a1), Edge(a1, b1)}};
  Matching m = Matching::from_pairs(g, std::vector<Edge>{Edge(x, y), Edge(v1, w1), Edge(a1, b1)});
};

inline Matching matching_of(const Graph& g, std::vector<Edge> pairs) {
  return Matching::from_pairs(g, pairs);
}

/// The graph itself as the tree, rooted at root.
inline SpanningTreeWithMatching tree_of(const Graph& g, const Matching& m, Vertex root = 0) {
  auto edges = g.edges();
  return tree_from_edges(g, root, edges, m);
}

/// Floyd-Warshall distances, independent of the library's BFS.
inline std::vector<std::vector<std::size_t>> all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = kUnreachable;
  return d;
}

/// Random bipartite graph (not necessarily connected or matchable).
inline Graph random_bipartite(Rng& rng, std::size_t n, std::size_t edges) {
  std::vector<Edge> e;
  const std::size_t half = std::max<std::size_t>(1, n / 2);
  for (std::size_t i = 0; i < edges && n >= 2; ++i) {
    auto a = static_cast<Vertex>(rng.below(half));
    auto b = static_cast<Vertex>(half + rng.below(n - half));
    e.emplace_back(a, b);
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Graph(n, e);
}

/// Random graph with arbitrary edges.
inline Graph random_graph(Rng& rng, std::size_t n, std::size_t edges) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < edges && n >= 2; ++i) {
    auto a = static_cast<Vertex>(rng.below(n));
    auto b = static_cast<Vertex>(rng.below(n));
    if (a != b) e.emplace_back(a, b);
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Graph(n, e);
}

}  // namespace testing

#endif  // BILACE_TESTS_SUPPORT_HPP
