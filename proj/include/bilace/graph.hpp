#ifndef BILACE_GRAPH_HPP
#define BILACE_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bilace/error.hpp"

namespace bilace {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws PreconditionError on loops,
  /// duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges, sorted ascending.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of v, or its decimal index when the graph is unlabelled.
  std::string label(Vertex v) const;
  /// Attaches labels; size must equal order().
  void set_labels(std::vector<std::string> labels);
  /// Resolves a label (or a decimal index when no label matches).
  std::optional<Vertex> find(std::string_view name) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

enum class Side : unsigned char { A, B };

/// Proper 2-colouring of a graph.
struct Bipartition {
  std::vector<Side> side;

  bool same_class(Vertex u, Vertex v) const { return side.at(u) == side.at(v); }
  /// True iff every edge of g joins different sides.
  bool valid_for(const Graph& g) const;
};

/// Edge cut E(L, R) with R = V \ L.
struct Cut {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<Edge> crossing;
};

/// Shortest-path edge counts from source; kUnreachable for other components.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Distance between u and v if it is at most limit, otherwise nullopt.
std::optional<std::size_t> bounded_distance(const Graph& g, Vertex u, Vertex v,
                                            std::size_t limit);

/// Bi-power: joins u and v iff their distance in g is odd and at most k.
Graph bi_power(const Graph& g, std::size_t k);

/// 2-colouring in which the lowest vertex of every component is on side A.
/// Throws OddCycleFound carrying an odd cycle when g is not bipartite.
Bipartition check_bipartition(const Graph& g);

/// Number of connected components.
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

Cut edge_cut(const Graph& g, std::span<const Vertex> left);

}  // namespace bilace

#endif  // BILACE_GRAPH_HPP
