#ifndef BILACE_LACE_HPP
#define BILACE_LACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bilace/graph.hpp"
#include "bilace/matching.hpp"
#include "bilace/tree.hpp"

namespace bilace {

/// Vertex sequence of a Hamilton path; consecutive vertices are at odd tree
/// distance at most 3.
struct HamPath {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const HamPath&, const HamPath&) = default;
};

/// Growing subtrees T_0 ⊆ T_1 ⊆ ... around a seed matching edge.
/// layers[i] is V(T_i) sorted; frontier[i] lists the matching edges of
/// T_i - V(T_{i-1}).
struct LayerDecomposition {
  std::vector<std::vector<Vertex>> layers;
  std::vector<std::vector<Edge>> frontier;
};

enum class SpliceCase : int { kKeep = 1, kOneSided = 2, kTwoSided = 3 };

struct Splice {
  SpliceCase kind = SpliceCase::kKeep;
  /// Replacement for the matching edge, running from x to y.
  std::vector<Vertex> segment;
};

/// Counters filled when the invariant checks are enabled. Any failed check
/// throws InvariantViolation, so a completed run means zero failures.
struct LaceStats {
  std::size_t matched_runs = 0;
  std::size_t layers_checked = 0;      // A_i verified Hamilton in (T_i)^3_B
  std::size_t replacement_checks = 0;  // A_i -> A_{i+1} edge persistence
  std::size_t case1_splits = 0;
  std::size_t case2_splits = 0;        // measure identity + dist_T(x',y') = 3
  std::size_t submatching_checks = 0;

  LaceStats& operator+=(const LaceStats& other);
};

LayerDecomposition layer_decomposition(const SpanningTreeWithMatching& t, Edge seed);

/// Replacement path for matching edge x-y whose subtree hangs below `parent`
/// (nullopt for the seed edge).
Splice splice_case(const SpanningTreeWithMatching& t, Vertex x, Vertex y,
                   std::optional<Vertex> parent);

/// Hamilton x-y path of T^3_B for a matching edge xy, built layer by layer.
HamPath hamilton_path_matched(const SpanningTreeWithMatching& t, Vertex x, Vertex y,
                              LaceStats* stats = nullptr);

/// Every intermediate path A_0, A_1, ... together with the layers they span.
struct MatchedPathTrace {
  std::vector<std::vector<Vertex>> paths;
  LayerDecomposition layers;
};
MatchedPathTrace trace_hamilton_path_matched(const SpanningTreeWithMatching& t, Vertex x,
                                             Vertex y, LaceStats* stats = nullptr);

/// Hamilton u-v path of G^3_B for u, v in different classes. Throws SameClass
/// when u and v share a class.
HamPath laceable_path(const Graph& g, const Matching& m, const SpanningTreeWithMatching& t,
                      Vertex u, Vertex v, LaceStats* stats = nullptr);

struct PathReport {
  bool ok = true;
  std::string violation;
  /// Index of the offending vertex or of the first vertex of the bad pair.
  std::optional<std::size_t> index;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that p visits every vertex once, runs from u to v, and that each
/// consecutive pair is at odd distance <= 3 both in the tree and in g.
PathReport verify_hampath(const Graph& g, const SpanningTreeWithMatching& t, const HamPath& p,
                          Vertex u, Vertex v);

/// Number of tree-path edges between u and v that are not matching edges.
std::size_t unmatched_tree_distance(const SpanningTreeWithMatching& t, Vertex u, Vertex v);

}  // namespace bilace

#endif  // BILACE_LACE_HPP
