#ifndef BILACE_MATCHING_HPP
#define BILACE_MATCHING_HPP

#include <optional>
#include <span>
#include <vector>

#include "bilace/graph.hpp"

namespace bilace {

/// Set of vertex-disjoint edges, stored as a partner table.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t n) : partner_(n) {}

  /// Validates that pairs are vertex-disjoint edges of g.
  static Matching from_pairs(const Graph& g, std::span<const Edge> pairs);

  std::size_t order() const noexcept { return partner_.size(); }
  std::optional<Vertex> partner(Vertex v) const { return partner_.at(v); }
  bool matched(Vertex v) const { return partner_.at(v).has_value(); }
  bool contains(Edge e) const { return partner_.at(e.u) == e.v; }

  /// Matched edges in ascending order.
  std::vector<Edge> pairs() const;
  std::size_t size() const;
  bool is_perfect() const;
  std::vector<Vertex> unmatched() const;

  void add(Edge e);
  void remove(Edge e);

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::optional<Vertex>> partner_;
};

/// Maximum-cardinality matching of a bipartite graph. Among all maximum
/// matchings returns the one whose sorted edge list is lexicographically least.
Matching maximum_matching(const Graph& g, const Bipartition& bip);

/// Returns m when perfect; throws NoPerfectMatching listing uncovered vertices.
const Matching& require_perfect(const Matching& m, const Graph& g);

}  // namespace bilace

#endif  // BILACE_MATCHING_HPP
