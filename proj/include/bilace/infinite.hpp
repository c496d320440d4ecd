#ifndef BILACE_INFINITE_HPP
#define BILACE_INFINITE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilace/graph.hpp"
#include "bilace/lace.hpp"
#include "bilace/tree.hpp"

namespace bilace {

/// Structured vertex identifier of a lazy graph. Generators decide what the
/// three coordinates mean; the order is lexicographic.
struct NodeId {
  std::int32_t kind = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Unordered pair of node ids, stored with first < second.
struct NodeEdge {
  NodeId first;
  NodeId second;

  NodeEdge() = default;
  NodeEdge(NodeId a, NodeId b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const NodeEdge&, const NodeEdge&) = default;
  friend bool operator==(const NodeEdge&, const NodeEdge&) = default;
};

/// Locally finite graph given by an adjacency oracle. Generators must be pure.
struct LazyGraph {
  using NodeFn = std::function<std::optional<NodeId>(const NodeId&)>;

  std::string name;
  std::function<std::vector<NodeId>(const NodeId&)> neighbors;
  std::optional<std::size_t> degree_bound;
  /// Declared spanning tree (parent pointer, nullopt at the root). Empty when
  /// the generator declares no tree.
  NodeFn tree_parent;
  /// Declared perfect matching. Empty when none is declared.
  NodeFn partner;
  /// Every fundamental cut of a tree edge at ball-depth d lies inside the
  /// ball of radius d + cut_locality.
  std::size_t cut_locality = 0;
  std::function<std::string(const NodeId&)> label;
  std::function<std::optional<NodeId>(std::string_view)> parse;
  NodeId origin;

  bool has_tree() const { return static_cast<bool>(tree_parent); }
  bool has_matching() const { return static_cast<bool>(partner); }

  /// Sorted neighbour list; throws LocalFinitenessError when the degree
  /// bound is exceeded or the list repeats a vertex.
  std::vector<NodeId> checked_neighbors(const NodeId& v) const;
  /// Parent plus children in the declared tree, sorted.
  std::vector<NodeId> tree_neighbors(const NodeId& v) const;
  std::string name_of(const NodeId& v) const;
};

/// Finite induced subgraph of a lazy graph with its id table. Dense index k
/// corresponds to ids[k]; ids are sorted.
struct Ball {
  Graph graph;
  std::vector<NodeId> ids;
  std::map<NodeId, Vertex> index;
  /// Distance from the centre (kUnreachable for subgraphs not built by ball()).
  std::vector<std::size_t> depth;

  std::optional<Vertex> find(const NodeId& id) const;
};

/// Induced subgraph on all vertices within distance r of center. Checks
/// symmetry of the oracle on every vertex whose neighbourhood lies inside.
Ball ball(const LazyGraph& lg, const NodeId& center, std::size_t r);

/// Induced subgraph on an explicit vertex set.
Ball induced(const LazyGraph& lg, std::vector<NodeId> ids);

struct ApproxOptions {
  std::size_t max_vertices = 1u << 20;
};

/// Truncated run of the layer construction on a lazy graph. paths[i] is the
/// vertex sequence of A_i, a Hamilton x-y path of (T_i)^3_B; stabilized[i]
/// is E(A_last) restricted to pairs inside V(T_i).
struct ArcApproximation {
  NodeId x;
  NodeId y;
  std::size_t radius = 0;
  std::vector<std::vector<NodeId>> layers;
  std::vector<std::vector<NodeId>> paths;
  std::vector<std::vector<NodeEdge>> stabilized;
  /// True when the layers stopped growing before `radius` steps.
  bool exhausted = false;
  std::vector<std::string> warnings;
  /// Host ball around x large enough for every distance check.
  Ball host;
  /// Host subgraph induced on the last layer, and the declared tree and
  /// matching restricted to it (same dense indices).
  Ball last_layer;
  std::optional<SpanningTreeWithMatching> tree;
  LaceStats stats;
};

/// Runs `radius` layer steps from the seed matching edge x-y. Throws
/// PreconditionError when the generator declares no tree or matching or the
/// seed is not a matching edge, RadiusError when radius is 0 or the ball
/// exceeds options.max_vertices.
ArcApproximation build_arc_approximation(const LazyGraph& lg, const NodeId& x, const NodeId& y,
                                         std::size_t radius, const ApproxOptions& options = {});

struct LayerCheck {
  std::size_t layer = 0;
  bool ok = true;
  std::string detail;
};

struct StabilizationReport {
  std::vector<LayerCheck> layers;
  std::optional<std::size_t> first_divergence;

  bool ok() const { return !first_divergence.has_value(); }
};

/// For every layer i: A_i is a Hamilton x-y path of (T_i)^3_B whose pairs are
/// also bi-cube edges of the host; the restriction of A_m to V(T_i) is the
/// same for all m > i; and every frozen edge e is the only crossing of its
/// prefix cut, extended through the components of T_m - E(T_i).
StabilizationReport stabilization_report(const ArcApproximation& a);

struct CutLocalityReport {
  std::size_t edges_checked = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares fundamental cuts of tree edges within max_depth of center when
/// computed in ball(d + cut_locality) and ball(d + cut_locality + extra).
CutLocalityReport check_cut_locality(const LazyGraph& lg, const NodeId& center,
                                     std::size_t max_depth, std::size_t extra = 5);

// Builtin generators.
LazyGraph ray_generator();
LazyGraph double_ray_generator();
LazyGraph ladder_generator();       // Z x {0,1}, rung matching
LazyGraph half_ladder_generator();  // N x {0,1}, rung matching
LazyGraph k2_generator();
LazyGraph layered_generator(std::size_t k, std::size_t l, std::size_t overshoot = 1);
LazyGraph star_ray_generator(std::size_t k);
LazyGraph figure1_generator();

/// Size of V_0 in layered_generator(k, l, overshoot).
std::size_t layered_base_size(std::size_t k, std::size_t l, std::size_t overshoot = 1);

std::vector<std::string> builtin_generator_names();
/// Looks up "ray", "double_ray", "ladder", "half_ladder", "k2", "figure1",
/// "H_layered:K:L" or "H_star:K". Throws PreconditionError for unknown names.
LazyGraph builtin_generator(std::string_view name);

}  // namespace bilace

#endif  // BILACE_INFINITE_HPP
