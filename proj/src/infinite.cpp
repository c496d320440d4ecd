#include "bilace/infinite.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bilace {

std::vector<NodeId> LazyGraph::checked_neighbors(const NodeId& v) const {
  auto out = neighbors(v);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw LocalFinitenessError(name + ": neighbour list of " + name_of(v) + " repeats a vertex");
  if (std::binary_search(out.begin(), out.end(), v))
    throw LocalFinitenessError(name + ": loop at " + name_of(v));
  if (degree_bound && out.size() > *degree_bound)
    throw LocalFinitenessError(name + ": " + name_of(v) + " exceeds the declared degree bound");
  return out;
}

std::vector<NodeId> LazyGraph::tree_neighbors(const NodeId& v) const {
  if (!has_tree()) throw PreconditionError(name + " declares no spanning tree");
  std::vector<NodeId> out;
  auto parent = tree_parent(v);
  for (const NodeId& u : checked_neighbors(v)) {
    if (u == parent || tree_parent(u) == v) out.push_back(u);
  }
  if (parent && !std::binary_search(out.begin(), out.end(), *parent))
    throw PreconditionError(name + ": tree parent of " + name_of(v) + " is not a neighbour");
  return out;
}

std::string LazyGraph::name_of(const NodeId& v) const {
  if (label) return label(v);
  return "(" + std::to_string(v.kind) + "," + std::to_string(v.i) + "," + std::to_string(v.j) +
         ")";
}

std::optional<Vertex> Ball::find(const NodeId& id) const {
  auto it = index.find(id);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

Ball assemble(const LazyGraph& lg, std::map<NodeId, std::vector<NodeId>> nbrs,
              const std::map<NodeId, std::size_t>& depth) {
  Ball b;
  for (const auto& [id, list] : nbrs) {
    b.index.emplace(id, static_cast<Vertex>(b.ids.size()));
    b.ids.push_back(id);
    auto d = depth.find(id);
    b.depth.push_back(d == depth.end() ? kUnreachable : d->second);
  }
  std::vector<Edge> edges;
  for (const auto& [id, list] : nbrs) {
    for (const NodeId& u : list) {
      auto it = nbrs.find(u);
      if (it == nbrs.end()) continue;
      if (!std::binary_search(it->second.begin(), it->second.end(), id))
        throw LocalFinitenessError(lg.name + ": adjacency of " + lg.name_of(id) + " and " +
                                   lg.name_of(u) + " is not symmetric");
      if (id < u) edges.emplace_back(b.index[id], b.index[u]);
    }
  }
  b.graph = Graph(b.ids.size(), edges);
  std::vector<std::string> labels;
  labels.reserve(b.ids.size());
  for (const NodeId& id : b.ids) labels.push_back(lg.name_of(id));
  b.graph.set_labels(std::move(labels));
  return b;
}

}  // namespace

Ball ball(const LazyGraph& lg, const NodeId& center, std::size_t r) {
  std::map<NodeId, std::size_t> depth{{center, 0}};
  std::map<NodeId, std::vector<NodeId>> nbrs;
  std::deque<NodeId> queue{center};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    auto list = lg.checked_neighbors(v);
    const std::size_t dv = depth[v];
    if (dv < r) {
      for (const NodeId& u : list)
        if (depth.emplace(u, dv + 1).second) queue.push_back(u);
    }
    nbrs.emplace(v, std::move(list));
  }
  return assemble(lg, std::move(nbrs), depth);
}

Ball induced(const LazyGraph& lg, std::vector<NodeId> ids) {
  std::map<NodeId, std::vector<NodeId>> nbrs;
  for (const NodeId& id : ids) nbrs.emplace(id, lg.checked_neighbors(id));
  return assemble(lg, std::move(nbrs), {});
}

namespace {

std::vector<NodeId> to_ids(const Ball& b, const std::vector<Vertex>& vs) {
  std::vector<NodeId> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(b.ids[v]);
  return out;
}

/// Host distance from x needed to reach every target.
std::size_t reach_depth(const LazyGraph& lg, const NodeId& x, const std::set<NodeId>& targets,
                        std::size_t max_vertices) {
  std::map<NodeId, std::size_t> depth{{x, 0}};
  std::deque<NodeId> queue{x};
  std::size_t found = 0;
  std::size_t deepest = 0;
  while (!queue.empty() && found < targets.size()) {
    NodeId v = queue.front();
    queue.pop_front();
    if (targets.contains(v)) {
      ++found;
      deepest = depth[v];
    }
    for (const NodeId& u : lg.checked_neighbors(v))
      if (depth.emplace(u, depth[v] + 1).second) queue.push_back(u);
    if (depth.size() > max_vertices)
      throw RadiusError("host search around the seed exceeded the vertex budget");
  }
  if (found < targets.size()) throw InvariantViolation("layer vertices unreachable in host");
  return deepest;
}

std::vector<NodeEdge> restrict_to(const std::vector<NodeId>& path,
                                  const std::vector<NodeId>& sorted_layer) {
  std::vector<NodeEdge> out;
  auto in = [&](const NodeId& v) {
    return std::binary_search(sorted_layer.begin(), sorted_layer.end(), v);
  };
  for (std::size_t j = 0; j + 1 < path.size(); ++j)
    if (in(path[j]) && in(path[j + 1])) out.emplace_back(path[j], path[j + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ArcApproximation build_arc_approximation(const LazyGraph& lg, const NodeId& x, const NodeId& y,
                                         std::size_t radius, const ApproxOptions& options) {
  if (!lg.has_tree() || !lg.has_matching())
    throw PreconditionError(lg.name + " must declare a spanning tree and a perfect matching");
  if (radius == 0) throw RadiusError("radius must be at least 1");
  if (lg.partner(x) != y || lg.partner(y) != x)
    throw PreconditionError("seed " + lg.name_of(x) + " " + lg.name_of(y) +
                            " is not a matching edge");
  if (lg.tree_parent(x) != y && lg.tree_parent(y) != x)
    throw PreconditionError("seed matching edge is not a tree edge");

  ArcApproximation a;
  a.x = x;
  a.y = y;
  a.radius = radius;
  if (radius < 8)
    a.warnings.push_back("radius " + std::to_string(radius) +
                         " is below 8; few inner layers can be checked");

  std::set<NodeId> in{x, y};
  std::vector<NodeId> newest{x, y};
  a.layers.push_back({std::min(x, y), std::max(x, y)});
  for (std::size_t step = 1; step <= radius; ++step) {
    std::vector<NodeId> fresh;
    for (const NodeId& v : newest)
      for (const NodeId& b : lg.tree_neighbors(v)) {
        if (in.contains(b)) continue;
        auto mate = lg.partner(b);
        if (!mate || (lg.tree_parent(*mate) != b && lg.tree_parent(b) != *mate))
          throw PreconditionError(lg.name + ": matching partner of " + lg.name_of(b) +
                                  " is not a tree neighbour");
        in.insert(b);
        in.insert(*mate);
        fresh.push_back(b);
        fresh.push_back(*mate);
      }
    if (fresh.empty()) {
      a.exhausted = true;
      break;
    }
    if (in.size() > options.max_vertices)
      throw RadiusError("layer " + std::to_string(step) + " exceeds the vertex budget");
    newest = std::move(fresh);
    a.layers.emplace_back(in.begin(), in.end());
  }

  // Finite restriction of tree and matching to the last layer.
  a.last_layer = induced(lg, a.layers.back());
  const Ball& fin = a.last_layer;
  std::vector<Edge> tree_edges;
  Matching matching(fin.ids.size());
  for (Vertex v = 0; v < fin.ids.size(); ++v) {
    if (auto p = lg.tree_parent(fin.ids[v])) {
      if (auto pv = fin.find(*p)) tree_edges.emplace_back(v, *pv);
    }
    auto mate = fin.find(*lg.partner(fin.ids[v]));
    if (!mate) throw InvariantViolation("layer is not closed under the matching");
    if (v < *mate) matching.add(Edge(v, *mate));
  }
  const Vertex xi = *fin.find(x);
  const Vertex yi = *fin.find(y);
  a.tree.emplace(tree_from_edges(fin.graph, xi, tree_edges, std::move(matching)));

  MatchedPathTrace trace = trace_hamilton_path_matched(*a.tree, xi, yi, &a.stats);
  if (trace.layers.layers.size() != a.layers.size())
    throw InvariantViolation("finite layer trace disagrees with the lazy layers");
  for (std::size_t i = 0; i < a.layers.size(); ++i)
    if (to_ids(fin, trace.layers.layers[i]) != a.layers[i])
      throw InvariantViolation("finite layer trace disagrees with the lazy layers");
  for (const auto& p : trace.paths) a.paths.push_back(to_ids(fin, p));

  const std::size_t frozen = a.layers.size() - (a.exhausted ? 0 : 1);
  for (std::size_t i = 0; i < frozen; ++i)
    a.stabilized.push_back(restrict_to(a.paths.back(), a.layers[i]));

  std::set<NodeId> targets(a.layers.back().begin(), a.layers.back().end());
  std::size_t depth = reach_depth(lg, x, targets, options.max_vertices);
  a.host = ball(lg, x, depth + lg.cut_locality + 2);
  if (a.host.ids.size() > options.max_vertices)
    throw RadiusError("host ball exceeds the vertex budget");
  return a;
}

namespace {

std::string check_hamilton(const ArcApproximation& a, std::size_t i) {
  const auto& path = a.paths[i];
  const auto& layer = a.layers[i];
  auto sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != layer) return "A_i does not visit V(T_i) exactly once";
  if (path.front() != a.x || path.back() != a.y) return "A_i does not run from x to y";
  const auto& t = *a.tree;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    auto ta = a.last_layer.find(path[j]);
    auto tb = a.last_layer.find(path[j + 1]);
    auto ha = a.host.find(path[j]);
    auto hb = a.host.find(path[j + 1]);
    if (!ta || !tb || !ha || !hb) return "A_i leaves the truncation";
    auto dt = t.distance_at_most(*ta, *tb, 3);
    if (!dt || *dt % 2 == 0) return "A_i pair at position " + std::to_string(j) + " not in T^3_B";
    auto dg = bounded_distance(a.host.graph, *ha, *hb, 3);
    if (!dg || *dg % 2 == 0)
      return "A_i pair at position " + std::to_string(j) + " not in G^3_B";
  }
  return {};
}

/// Index of the vertex of T_i from which each vertex of the last layer hangs
/// in T_last - E(T_i).
std::vector<std::optional<Vertex>> anchors(const ArcApproximation& a, std::size_t i) {
  const auto& t = *a.tree;
  std::vector<std::optional<Vertex>> anchor(t.order());
  std::deque<Vertex> queue;
  for (const NodeId& id : a.layers[i]) {
    Vertex v = *a.last_layer.find(id);
    anchor[v] = v;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : t.tree_neighbors(v))
      if (!anchor[w]) {
        anchor[w] = anchor[v];
        queue.push_back(w);
      }
  }
  return anchor;
}

std::string check_cuts(const ArcApproximation& a, std::size_t i) {
  const auto& ai = a.paths[i];
  const std::size_t last = a.paths.size() - 1;
  auto anchor = anchors(a, i);
  std::vector<std::size_t> later{std::min(i + 1, last)};
  if (last != later.front()) later.push_back(last);

  for (const NodeEdge& e : a.stabilized[i]) {
    std::size_t cut_at = ai.size();
    for (std::size_t j = 0; j + 1 < ai.size(); ++j)
      if (NodeEdge(ai[j], ai[j + 1]) == e) cut_at = j;
    if (cut_at == ai.size()) return "frozen edge is not an edge of A_i";
    std::vector<bool> left(a.tree->order(), false);
    for (std::size_t j = 0; j <= cut_at; ++j) left[*a.last_layer.find(ai[j])] = true;

    for (std::size_t k : later) {
      const auto& ak = a.paths[k];
      std::size_t crossings = 0;
      bool only_e = true;
      for (std::size_t j = 0; j + 1 < ak.size(); ++j) {
        bool sa = left[*anchor[*a.last_layer.find(ak[j])]];
        bool sb = left[*anchor[*a.last_layer.find(ak[j + 1])]];
        if (sa == sb) continue;
        ++crossings;
        if (NodeEdge(ak[j], ak[j + 1]) != e) only_e = false;
      }
      if (crossings != 1 || !only_e)
        return "A_" + std::to_string(k) + " meets the cut of a frozen edge of layer " +
               std::to_string(i) + " in " + std::to_string(crossings) + " pairs";
    }
  }
  return {};
}

}  // namespace

StabilizationReport stabilization_report(const ArcApproximation& a) {
  StabilizationReport report;
  if (!a.tree || a.paths.empty() || a.paths.size() != a.layers.size()) {
    report.layers.push_back({0, false, "approximation is incomplete"});
    report.first_divergence = 0;
    return report;
  }
  const std::size_t last = a.paths.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    LayerCheck check{i, true, {}};
    std::string why = check_hamilton(a, i);
    if (why.empty() && i < a.stabilized.size()) {
      for (std::size_t k = i + 1; k <= last && why.empty(); ++k)
        if (restrict_to(a.paths[k], a.layers[i]) != a.stabilized[i])
          why = "restriction of A_" + std::to_string(k) + " to V(T_" + std::to_string(i) +
                ") differs from the frozen edge set";
      if (why.empty()) why = check_cuts(a, i);
    }
    if (!why.empty()) {
      check.ok = false;
      check.detail = std::move(why);
      if (!report.first_divergence) report.first_divergence = i;
    }
    report.layers.push_back(std::move(check));
  }
  return report;
}

CutLocalityReport check_cut_locality(const LazyGraph& lg, const NodeId& center,
                                     std::size_t max_depth, std::size_t extra) {
  if (!lg.has_tree()) throw PreconditionError(lg.name + " declares no spanning tree");
  CutLocalityReport report;
  std::map<std::size_t, Ball> balls;
  auto ball_of = [&](std::size_t r) -> const Ball& {
    auto it = balls.find(r);
    if (it == balls.end()) it = balls.emplace(r, ball(lg, center, r)).first;
    return it->second;
  };
  auto below = [&](const NodeId& child, NodeId w) {
    while (true) {
      if (w == child) return true;
      auto p = lg.tree_parent(w);
      if (!p) return false;
      w = *p;
    }
  };
  auto cut_in = [&](const NodeId& child, std::size_t r) {
    const Ball& b = ball_of(r);
    std::vector<NodeEdge> out;
    for (const Edge& e : b.graph.edges())
      if (below(child, b.ids[e.u]) != below(child, b.ids[e.v]))
        out.emplace_back(b.ids[e.u], b.ids[e.v]);
    return out;
  };

  const Ball& scope = ball_of(max_depth);
  for (Vertex v = 0; v < scope.ids.size(); ++v) {
    auto p = lg.tree_parent(scope.ids[v]);
    if (!p) continue;
    auto pv = scope.find(*p);
    if (!pv) continue;
    const std::size_t d = std::max(scope.depth[v], scope.depth[*pv]);
    auto near = cut_in(scope.ids[v], d + lg.cut_locality);
    auto far = cut_in(scope.ids[v], d + lg.cut_locality + extra);
    ++report.edges_checked;
    if (near != far)
      report.mismatches.push_back("fundamental cut of " + lg.name_of(scope.ids[v]) + "-" +
                                  lg.name_of(*p) + " is not contained in ball(" +
                                  std::to_string(d + lg.cut_locality) + ")");
  }
  return report;
}

}  // namespace bilace
