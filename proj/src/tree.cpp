#include "bilace/tree.hpp"

#include <algorithm>
#include <deque>

namespace bilace {

SpanningTreeWithMatching::SpanningTreeWithMatching(Graph host, Vertex root,
                                                   std::vector<std::optional<Vertex>> parent,
                                                   Matching matching)
    : host_(std::move(host)),
      root_(root),
      parent_(std::move(parent)),
      matching_(std::move(matching)) {
  const std::size_t n = host_.order();
  if (n == 0) throw PreconditionError("spanning tree of an empty graph");
  if (root_ >= n) throw PreconditionError("tree root out of range");
  if (parent_.size() != n) throw PreconditionError("parent table size mismatch");
  if (matching_.order() != n) throw PreconditionError("matching size mismatch");

  tree_adjacency_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if ((v == root_) != !parent_[v].has_value())
      throw PreconditionError("parent must be null exactly at the root");
    if (!parent_[v]) continue;
    Vertex p = *parent_[v];
    if (p >= n || !host_.adjacent(v, p))
      throw PreconditionError("tree edge " + std::to_string(v) + "-" + std::to_string(p) +
                              " is not a host edge");
    tree_adjacency_[v].push_back(p);
    tree_adjacency_[p].push_back(v);
  }
  for (auto& list : tree_adjacency_) std::sort(list.begin(), list.end());

  // Connected + n-1 edges => acyclic spanning tree.
  depth_.assign(n, kUnreachable);
  unmatched_depth_.assign(n, 0);
  depth_[root_] = 0;
  std::deque<Vertex> queue{root_};
  std::size_t reached = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    ++reached;
    for (Vertex w : tree_adjacency_[u]) {
      if (depth_[w] != kUnreachable) continue;
      if (parent_[w] != u) throw PreconditionError("parent pointers contain a cycle");
      depth_[w] = depth_[u] + 1;
      bool in_m = matching_.order() == n && matching_.partner(w) == u;
      unmatched_depth_[w] = unmatched_depth_[u] + (in_m ? 0 : 1);
      queue.push_back(w);
    }
  }
  if (reached != n) throw PreconditionError("parent pointers do not span the host graph");

  for (const Edge& e : matching_.pairs())
    if (!is_tree_edge(e.u, e.v))
      throw PreconditionError("matching edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v) + " is not a tree edge");
}

bool SpanningTreeWithMatching::is_tree_edge(Vertex u, Vertex v) const {
  return parent_.at(u) == v || parent_.at(v) == u;
}

std::vector<Edge> SpanningTreeWithMatching::tree_edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < parent_.size(); ++v)
    if (parent_[v]) out.emplace_back(v, *parent_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Graph SpanningTreeWithMatching::as_graph() const {
  Graph g(order(), tree_edges());
  g.set_labels(host_.labels());
  return g;
}

Vertex SpanningTreeWithMatching::lca(Vertex u, Vertex v) const {
  while (depth_.at(u) > depth_.at(v)) u = *parent_[u];
  while (depth_.at(v) > depth_.at(u)) v = *parent_[v];
  while (u != v) {
    u = *parent_[u];
    v = *parent_[v];
  }
  return u;
}

std::size_t SpanningTreeWithMatching::distance(Vertex u, Vertex v) const {
  return depth_.at(u) + depth_.at(v) - 2 * depth_[lca(u, v)];
}

std::optional<std::size_t> SpanningTreeWithMatching::distance_at_most(Vertex u, Vertex v,
                                                                      std::size_t limit) const {
  std::size_t steps = 0;
  while (u != v) {
    if (steps == limit) return std::nullopt;
    if (depth_.at(u) >= depth_.at(v)) u = *parent_[u]; else v = *parent_[v];
    ++steps;
  }
  return steps;
}

std::size_t SpanningTreeWithMatching::unmatched_distance(Vertex u, Vertex v) const {
  return unmatched_depth_.at(u) + unmatched_depth_.at(v) - 2 * unmatched_depth_[lca(u, v)];
}

Vertex SpanningTreeWithMatching::step_toward(Vertex from, Vertex to) const {
  if (from == to) throw PreconditionError("step_toward needs distinct vertices");
  if (depth_.at(to) <= depth_.at(from)) return *parent_[from];
  Vertex w = to;
  while (depth_[w] > depth_[from] + 1) w = *parent_[w];
  return parent_[w] == from ? w : *parent_[from];
}

bool SpanningTreeWithMatching::is_ancestor(Vertex ancestor, Vertex v) const {
  while (depth_.at(v) > depth_.at(ancestor)) v = *parent_[v];
  return v == ancestor;
}

Edge ContractedGraph::witness_for(Edge quotient_edge) const {
  auto edges = quotient.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), quotient_edge);
  if (it == edges.end() || *it != quotient_edge)
    throw PreconditionError("not an edge of the quotient graph");
  return witness[static_cast<std::size_t>(it - edges.begin())];
}

ContractedGraph contract_matching(const Graph& g, const Matching& m) {
  require_perfect(m, g);
  ContractedGraph c;
  c.pairs = m.pairs();
  c.pair_of.assign(g.order(), 0);
  for (Vertex i = 0; i < c.pairs.size(); ++i) {
    c.pair_of[c.pairs[i].u] = i;
    c.pair_of[c.pairs[i].v] = i;
  }
  // Host edges come out sorted, so the first realizing edge is the least one.
  std::vector<std::pair<Edge, Edge>> realized;
  for (const Edge& e : g.edges()) {
    Vertex a = c.pair_of[e.u];
    Vertex b = c.pair_of[e.v];
    if (a != b) realized.emplace_back(Edge(a, b), e);
  }
  std::stable_sort(realized.begin(), realized.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Edge> qedges;
  for (const auto& [q, host_edge] : realized) {
    if (!qedges.empty() && qedges.back() == q) continue;
    qedges.push_back(q);
    c.witness.push_back(host_edge);
  }
  c.quotient = Graph(c.pairs.size(), qedges);
  return c;
}

SpanningTreeWithMatching dfs_normal_tree(const Graph& g, Vertex root) {
  const std::size_t n = g.order();
  if (root >= n) throw PreconditionError("root out of range");
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[root] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto nbrs = g.neighbors(u);
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = nbrs[next++];
    if (seen[w]) continue;
    seen[w] = true;
    parent[w] = u;
    ++reached;
    stack.emplace_back(w, 0);
  }
  if (reached != n) throw NotConnected("graph is not connected");
  return SpanningTreeWithMatching(g, root, std::move(parent), Matching(n));
}

namespace {

std::vector<std::optional<Vertex>> orient(std::size_t n, std::span<const Edge> edges,
                                          Vertex root) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
  }
  return parent;
}

}  // namespace

SpanningTreeWithMatching tree_with_matching(const Graph& g, const Matching& m) {
  if (!is_connected(g)) throw NotConnected("graph is not connected");
  ContractedGraph c = contract_matching(g, m);
  SpanningTreeWithMatching quotient_tree = dfs_normal_tree(c.quotient, c.pair_of[0]);

  std::vector<Edge> edges = c.pairs;
  for (const Edge& qe : quotient_tree.tree_edges()) edges.push_back(c.witness_for(qe));
  return tree_from_edges(g, c.pairs[c.pair_of[0]].u, edges, m);
}

SpanningTreeWithMatching tree_from_edges(Graph host, Vertex root, std::span<const Edge> edges,
                                         Matching matching) {
  if (root >= host.order()) throw PreconditionError("root out of range");
  if (edges.size() + 1 != host.order())
    throw PreconditionError("a spanning tree needs exactly n-1 edges");
  auto parent = orient(host.order(), edges, root);
  return SpanningTreeWithMatching(std::move(host), root, std::move(parent), std::move(matching));
}

std::vector<Vertex> tree_path(const SpanningTreeWithMatching& t, Vertex u, Vertex v) {
  if (u >= t.order() || v >= t.order()) throw PreconditionError("vertex out of range");
  Vertex top = t.lca(u, v);
  std::vector<Vertex> path;
  for (Vertex x = u; x != top; x = *t.parent(x)) path.push_back(x);
  path.push_back(top);
  std::size_t mark = path.size();
  for (Vertex x = v; x != top; x = *t.parent(x)) path.push_back(x);
  std::reverse(path.begin() + static_cast<std::ptrdiff_t>(mark), path.end());
  return path;
}

Cut fundamental_cut(const SpanningTreeWithMatching& t, Edge e) {
  if (e.v >= t.order() || !t.is_tree_edge(e.u, e.v))
    throw PreconditionError("fundamental cut requested for a non-tree edge");
  std::vector<bool> side(t.order(), false);
  std::vector<Vertex> stack{e.u};
  side[e.u] = true;
  std::vector<Vertex> left;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    left.push_back(x);
    for (Vertex w : t.tree_neighbors(x)) {
      if (side[w] || (x == e.u && w == e.v)) continue;
      side[w] = true;
      stack.push_back(w);
    }
  }
  std::sort(left.begin(), left.end());
  return edge_cut(t.host(), left);
}

}  // namespace bilace
