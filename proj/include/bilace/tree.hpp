#ifndef BILACE_TREE_HPP
#define BILACE_TREE_HPP

#include <optional>
#include <vector>

#include "bilace/graph.hpp"
#include "bilace/matching.hpp"

namespace bilace {

/// Rooted spanning tree of a host graph together with a matching whose edges
/// are all tree edges.
class SpanningTreeWithMatching {
 public:
  /// Validates every invariant; throws PreconditionError on violation.
  SpanningTreeWithMatching(Graph host, Vertex root, std::vector<std::optional<Vertex>> parent,
                           Matching matching);

  const Graph& host() const noexcept { return host_; }
  Vertex root() const noexcept { return root_; }
  std::size_t order() const noexcept { return host_.order(); }
  std::optional<Vertex> parent(Vertex v) const { return parent_.at(v); }
  const std::vector<std::optional<Vertex>>& parents() const noexcept { return parent_; }
  const Matching& matching() const noexcept { return matching_; }
  std::optional<Vertex> partner(Vertex v) const { return matching_.partner(v); }

  std::size_t depth(Vertex v) const { return depth_.at(v); }
  /// Tree neighbours of v in ascending order.
  std::span<const Vertex> tree_neighbors(Vertex v) const { return tree_adjacency_.at(v); }
  bool is_tree_edge(Vertex u, Vertex v) const;
  std::vector<Edge> tree_edges() const;
  /// Tree as a standalone graph.
  Graph as_graph() const;

  /// dist_T(u, v).
  std::size_t distance(Vertex u, Vertex v) const;
  /// dist_T(u, v) when at most limit, walking at most limit parent steps.
  std::optional<std::size_t> distance_at_most(Vertex u, Vertex v, std::size_t limit) const;
  /// Lowest common ancestor with respect to the root.
  Vertex lca(Vertex u, Vertex v) const;
  bool is_ancestor(Vertex ancestor, Vertex v) const;
  /// Number of non-matching edges on the u-v tree path.
  std::size_t unmatched_distance(Vertex u, Vertex v) const;
  /// Neighbour of from on the tree path to to.
  Vertex step_toward(Vertex from, Vertex to) const;

 private:
  Graph host_;
  Vertex root_;
  std::vector<std::optional<Vertex>> parent_;
  Matching matching_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> unmatched_depth_;
  std::vector<std::vector<Vertex>> tree_adjacency_;
};

/// Quotient G/M: vertex i is matching pair i (ascending pair order).
struct ContractedGraph {
  Graph quotient;
  std::vector<Edge> pairs;
  /// pair index of every host vertex
  std::vector<Vertex> pair_of;
  /// Lexicographically least host edge realizing each quotient edge, indexed
  /// like quotient.edges().
  std::vector<Edge> witness;

  Edge witness_for(Edge quotient_edge) const;
};

ContractedGraph contract_matching(const Graph& g, const Matching& m);

/// Depth-first spanning tree with ascending-neighbour exploration; carries an
/// empty matching. Throws NotConnected.
SpanningTreeWithMatching dfs_normal_tree(const Graph& g, Vertex root);

/// Spanning tree containing the perfect matching m: M plus the witness edges
/// of a DFS tree of G/M rooted at the pair of vertex 0.
SpanningTreeWithMatching tree_with_matching(const Graph& g, const Matching& m);

/// Roots the given spanning-tree edge set at root.
SpanningTreeWithMatching tree_from_edges(Graph host, Vertex root, std::span<const Edge> edges,
                                         Matching matching);

/// The unique tree path from u to v, both inclusive.
std::vector<Vertex> tree_path(const SpanningTreeWithMatching& t, Vertex u, Vertex v);

/// Fundamental cut of tree edge e: left holds the component of T - e
/// containing e.u.
Cut fundamental_cut(const SpanningTreeWithMatching& t, Edge e);

}  // namespace bilace

#endif  // BILACE_TREE_HPP
