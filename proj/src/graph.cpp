#include "bilace/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace bilace {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.v >= n) throw PreconditionError("edge endpoint out of range: " + std::to_string(e.v));
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw PreconditionError("duplicate edge");
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order())
    throw PreconditionError("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == name) return v;
  Vertex index = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), index);
  if (ec == std::errc{} && ptr == name.data() + name.size() && index < order()) return index;
  return std::nullopt;
}

bool Bipartition::valid_for(const Graph& g) const {
  if (side.size() != g.order()) return false;
  for (const Edge& e : g.edges())
    if (side[e.u] == side[e.v]) return false;
  return true;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw PreconditionError("source vertex out of range");
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

namespace {

bool share_neighbor(const Graph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> bounded_distance(const Graph& g, Vertex u, Vertex v,
                                            std::size_t limit) {
  if (u >= g.order() || v >= g.order()) throw PreconditionError("vertex out of range");
  if (u == v) return 0;
  if (limit >= 1 && g.adjacent(u, v)) return 1;
  if (limit >= 2 && share_neighbor(g, u, v)) return 2;
  if (limit >= 3) {
    for (Vertex c : g.neighbors(u))
      if (share_neighbor(g, c, v)) return 3;
  }
  if (limit <= 3) return std::nullopt;
  auto dist = bfs_distances(g, u);
  if (dist[v] <= limit) return dist[v];
  return std::nullopt;
}

Graph bi_power(const Graph& g, std::size_t k) {
  std::vector<Edge> edges;
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    dist[s] = 0;
    touched.assign(1, s);
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (dist[u] == k) continue;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] != kUnreachable) continue;
        dist[w] = dist[u] + 1;
        touched.push_back(w);
        queue.push_back(w);
      }
    }
    for (Vertex w : touched) {
      if (w > s && dist[w] % 2 == 1) edges.emplace_back(s, w);
      dist[w] = kUnreachable;
    }
  }
  std::sort(edges.begin(), edges.end());
  Graph out(g.order(), edges);
  out.set_labels(g.labels());
  return out;
}

Bipartition check_bipartition(const Graph& g) {
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> parent(n, kNone);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          // Both BFS-tree paths to the common ancestor plus uw form an odd cycle.
          std::vector<Vertex> up{u};
          std::vector<Vertex> wp{w};
          while (up.back() != kNone && parent[up.back()] != kNone) up.push_back(parent[up.back()]);
          while (wp.back() != kNone && parent[wp.back()] != kNone) wp.push_back(parent[wp.back()]);
          while (up.size() > 1 && wp.size() > 1 && up[up.size() - 2] == wp[wp.size() - 2]) {
            up.pop_back();
            wp.pop_back();
          }
          // up and wp now end at the lowest common ancestor.
          std::vector<Vertex> cycle(up.begin(), up.end());
          for (auto it = wp.rbegin() + 1; it != wp.rend(); ++it) cycle.push_back(*it);
          throw OddCycleFound(std::move(cycle));
        }
      }
    }
  }
  Bipartition bip;
  bip.side.reserve(n);
  for (int c : colour) bip.side.push_back(c == 0 ? Side::A : Side::B);
  return bip;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

Cut edge_cut(const Graph& g, std::span<const Vertex> left) {
  std::vector<bool> in_left(g.order(), false);
  for (Vertex v : left) {
    if (v >= g.order()) throw PreconditionError("cut vertex out of range");
    in_left[v] = true;
  }
  Cut cut;
  for (Vertex v = 0; v < g.order(); ++v) (in_left[v] ? cut.left : cut.right).push_back(v);
  if (cut.left.empty() || cut.right.empty())
    throw PreconditionError("cut side must be a nonempty proper subset");
  for (const Edge& e : g.edges())
    if (in_left[e.u] != in_left[e.v]) cut.crossing.push_back(e);
  return cut;
}

}  // namespace bilace
