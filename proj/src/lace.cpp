#include "bilace/lace.hpp"

#include <algorithm>

namespace bilace {

LaceStats& LaceStats::operator+=(const LaceStats& other) {
  matched_runs += other.matched_runs;
  layers_checked += other.layers_checked;
  replacement_checks += other.replacement_checks;
  case1_splits += other.case1_splits;
  case2_splits += other.case2_splits;
  submatching_checks += other.submatching_checks;
  return *this;
}

std::size_t unmatched_tree_distance(const SpanningTreeWithMatching& t, Vertex u, Vertex v) {
  return t.unmatched_distance(u, v);
}

LayerDecomposition layer_decomposition(const SpanningTreeWithMatching& t, Edge seed) {
  if (!t.matching().contains(seed)) throw PreconditionError("seed is not a matching edge");
  const std::size_t n = t.order();
  std::vector<bool> in(n, false);
  std::vector<Vertex> current{seed.u, seed.v};
  in[seed.u] = in[seed.v] = true;

  LayerDecomposition out;
  out.layers.push_back(current);
  out.frontier.push_back({seed});
  while (true) {
    // A matching edge joins T_{i+1} iff one endpoint is in T_i or adjacent
    // to it; T_i is closed under partners, so only adjacent edges are new.
    std::vector<Edge> fresh;
    for (Vertex a : current)
      for (Vertex b : t.tree_neighbors(a)) {
        if (in[b]) continue;
        auto mate = t.partner(b);
        if (!mate) throw PreconditionError("tree vertex without matching partner");
        fresh.emplace_back(b, *mate);
      }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (fresh.empty()) break;
    for (const Edge& e : fresh) {
      in[e.u] = in[e.v] = true;
      current.push_back(e.u);
      current.push_back(e.v);
    }
    std::sort(current.begin(), current.end());
    out.layers.push_back(current);
    out.frontier.push_back(std::move(fresh));
  }
  return out;
}

namespace {

bool odd_within_three(const SpanningTreeWithMatching& t, Vertex a, Vertex b) {
  auto d = t.distance_at_most(a, b, 3);
  return d && (*d % 2 == 1);
}

/// Runs the layer expansion and the induction on subtrees of one tree. A
/// subtree is a label in scope_; splitting relabels one side.
class LaceEngine {
 public:
  LaceEngine(const SpanningTreeWithMatching& t, LaceStats* stats)
      : t_(t),
        stats_(stats),
        scope_(t.order(), 0),
        slot_(t.order(), -1),
        pos_(stats ? t.order() : 0, -1) {}

  Splice splice(Vertex x, Vertex y, std::optional<Vertex> parent, std::uint32_t scope,
                std::vector<Vertex>* near_children, std::vector<Vertex>* far_children) const {
    std::vector<Vertex> as;
    std::vector<Vertex> vs;
    for (Vertex w : t_.tree_neighbors(x))
      if (w != y && w != parent && scope_[w] == scope) as.push_back(w);
    for (Vertex w : t_.tree_neighbors(y))
      if (w != x && w != parent && scope_[w] == scope) vs.push_back(w);
    auto mate = [&](Vertex v) {
      auto p = t_.partner(v);
      if (!p || scope_[*p] != scope)
        throw PreconditionError("vertex " + std::to_string(v) + " has no matching partner");
      return *p;
    };

    Splice out;
    if (as.empty() && vs.empty()) {
      out.kind = SpliceCase::kKeep;
      out.segment = {x, y};
    } else if (as.empty()) {
      out.kind = SpliceCase::kOneSided;
      out.segment.push_back(x);
      for (Vertex v : vs) {
        out.segment.push_back(mate(v));
        out.segment.push_back(v);
      }
      out.segment.push_back(y);
    } else if (vs.empty()) {
      // Trivial side is y: build y .. x with y in the role of x, then reverse.
      out.kind = SpliceCase::kOneSided;
      out.segment.push_back(y);
      for (Vertex a : as) {
        out.segment.push_back(mate(a));
        out.segment.push_back(a);
      }
      out.segment.push_back(x);
      std::reverse(out.segment.begin(), out.segment.end());
    } else {
      out.kind = SpliceCase::kTwoSided;
      out.segment.push_back(x);
      for (Vertex v : vs) {
        out.segment.push_back(mate(v));
        out.segment.push_back(v);
      }
      for (Vertex a : as) {
        out.segment.push_back(a);
        out.segment.push_back(mate(a));
      }
      out.segment.push_back(y);
    }
    if (near_children) *near_children = std::move(as);
    if (far_children) *far_children = std::move(vs);
    return out;
  }

  std::vector<Vertex> matched(Vertex x, Vertex y, std::uint32_t scope, MatchedPathTrace* trace) {
    if (t_.partner(x) != y) throw PreconditionError("seed is not a matching edge");
    struct Front {
      Vertex near;
      Vertex far;
      std::optional<Vertex> parent;
    };
    std::vector<Vertex> path{x, y};
    std::vector<Front> frontier{{x, y, std::nullopt}};
    std::vector<Vertex> layer{x, y};
    if (trace) {
      trace->paths.push_back(path);
      trace->layers.layers.push_back(sorted(layer));
      trace->layers.frontier.push_back({Edge(x, y)});
    }
    if (stats_) {
      ++stats_->matched_runs;
      check_layer(path, layer.size(), x, y);
      clear_positions(path, path.size());
    }

    std::vector<Splice> segments;
    std::vector<Front> next;
    std::vector<Vertex> as;
    std::vector<Vertex> vs;
    while (true) {
      segments.clear();
      next.clear();
      for (const Front& f : frontier) {
        segments.push_back(splice(f.near, f.far, f.parent, scope, &as, &vs));
        slot_[f.near] = slot_[f.far] = static_cast<std::int32_t>(segments.size() - 1);
        for (Vertex v : vs) next.push_back({v, *t_.partner(v), f.far});
        for (Vertex a : as) next.push_back({a, *t_.partner(a), f.near});
      }
      if (next.empty()) {
        for (const Front& f : frontier) slot_[f.near] = slot_[f.far] = -1;
        break;
      }

      std::vector<Vertex> grown;
      grown.reserve(path.size() + 2 * next.size());
      grown.push_back(path.front());
      for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        Vertex a = path[j];
        Vertex b = path[j + 1];
        if (slot_[a] >= 0 && slot_[a] == slot_[b]) {
          const auto& seg = segments[static_cast<std::size_t>(slot_[a])].segment;
          if (seg.front() == a)
            grown.insert(grown.end(), seg.begin() + 1, seg.end());
          else
            grown.insert(grown.end(), seg.rbegin() + 1, seg.rend());
        } else {
          grown.push_back(b);
        }
      }

      for (const Front& f : next) {
        layer.push_back(f.near);
        layer.push_back(f.far);
      }
      if (stats_) check_growth(path, grown, segments, next, layer.size(), x, y);
      for (const Front& f : frontier) slot_[f.near] = slot_[f.far] = -1;

      path = std::move(grown);
      frontier.swap(next);
      if (trace) {
        trace->paths.push_back(path);
        trace->layers.layers.push_back(sorted(layer));
        std::vector<Edge> fe;
        for (const Front& f : frontier) fe.emplace_back(f.near, f.far);
        std::sort(fe.begin(), fe.end());
        trace->layers.frontier.push_back(std::move(fe));
      }
    }
    return path;
  }

  void lace(Vertex u, Vertex v, std::uint32_t scope, std::vector<Vertex>& out) {
    // x y is the first non-matching edge on the tree path from u; j counts
    // the matching edges before it.
    Vertex x = u;
    Vertex y = t_.step_toward(u, v);
    std::size_t j = 0;
    while (t_.partner(x) == y) {
      if (y == v) {
        if (j != 0) throw InvariantViolation("d = 0 but u-v tree path is not one edge");
        auto piece = matched(u, v, scope, nullptr);
        out.insert(out.end(), piece.begin(), piece.end());
        return;
      }
      x = y;
      y = t_.step_toward(x, v);
      ++j;
    }
    const std::uint32_t left = split(x, y, scope);
    const std::uint32_t right = scope;

    if (j % 2 == 1) {
      if (stats_) {
        ++stats_->case1_splits;
        if (unmatched_tree_distance(t_, u, x) + unmatched_tree_distance(t_, y, v) + 1 !=
            unmatched_tree_distance(t_, u, v))
          throw InvariantViolation("case 1 measure identity failed");
      }
      lace(u, x, left, out);
      lace(y, v, right, out);
    } else {
      const Vertex xp = *t_.partner(x);
      const Vertex yp = *t_.partner(y);
      if (stats_) {
        ++stats_->case2_splits;
        if (unmatched_tree_distance(t_, u, v) !=
            unmatched_tree_distance(t_, u, xp) + unmatched_tree_distance(t_, yp, v) + 1)
          throw InvariantViolation("case 2 measure identity failed");
        if (t_.distance(xp, yp) != 3) throw InvariantViolation("case 2: dist_T(x', y') != 3");
      }
      lace(u, xp, left, out);
      lace(yp, v, right, out);
    }
  }

 private:
  static std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  /// Moves the component of x in (scope - xy) to a fresh label. The x side
  /// is the one that recursion finishes first, so these sides are disjoint
  /// over a whole run.
  std::uint32_t split(Vertex x, Vertex y, std::uint32_t scope) {
    const std::uint32_t fresh = next_scope_++;
    std::vector<Vertex> stack{x};
    std::vector<Vertex> moved;
    scope_[x] = fresh;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      moved.push_back(a);
      for (Vertex b : t_.tree_neighbors(a)) {
        if (scope_[b] != scope || (a == x && b == y)) continue;
        scope_[b] = fresh;
        stack.push_back(b);
      }
    }
    if (stats_) {
      // Partners form an involution, so checking one side covers both.
      ++stats_->submatching_checks;
      for (Vertex a : moved) {
        auto p = t_.partner(a);
        if (!p || scope_[*p] != fresh)
          throw InvariantViolation("matching is not perfect on a split subtree");
      }
    }
    return fresh;
  }

  void check_layer(const std::vector<Vertex>& path, std::size_t layer_size, Vertex x, Vertex y) {
    ++stats_->layers_checked;
    if (path.size() != layer_size || path.front() != x || path.back() != y)
      throw InvariantViolation("A_i is not an x-y path over its layer");
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (pos_[path[j]] != -1) {
        clear_positions(path, j);
        throw InvariantViolation("A_i repeats a vertex");
      }
      pos_[path[j]] = static_cast<std::int32_t>(j);
    }
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
      if (!odd_within_three(t_, path[j], path[j + 1])) {
        clear_positions(path, path.size());
        throw InvariantViolation("A_i uses a pair outside T^3_B");
      }
  }

  void clear_positions(const std::vector<Vertex>& path, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) pos_[path[j]] = -1;
  }

  void check_growth(const std::vector<Vertex>& before, const std::vector<Vertex>& after,
                    const std::vector<Splice>& segments, const auto& next,
                    std::size_t layer_size, Vertex x, Vertex y) {
    check_layer(after, layer_size, x, y);
    ++stats_->replacement_checks;
    auto consecutive = [&](Vertex a, Vertex b) {
      return pos_[a] >= 0 && pos_[b] >= 0 && (pos_[a] - pos_[b] == 1 || pos_[b] - pos_[a] == 1);
    };
    bool ok = true;
    for (std::size_t j = 0; ok && j + 1 < before.size(); ++j) {
      Vertex a = before[j];
      Vertex b = before[j + 1];
      bool expanded = slot_[a] >= 0 && slot_[a] == slot_[b] &&
                      segments[static_cast<std::size_t>(slot_[a])].kind != SpliceCase::kKeep;
      ok = consecutive(a, b) != expanded;
    }
    for (const auto& f : next)
      if (!consecutive(f.near, f.far)) ok = false;
    clear_positions(after, after.size());
    if (!ok) throw InvariantViolation("replacement discipline violated between A_i and A_{i+1}");
  }

  const SpanningTreeWithMatching& t_;
  LaceStats* stats_;
  std::vector<std::uint32_t> scope_;
  std::vector<std::int32_t> slot_;
  std::vector<std::int32_t> pos_;
  std::uint32_t next_scope_ = 1;
};

void require_seed(const SpanningTreeWithMatching& t, Vertex x, Vertex y) {
  if (x >= t.order() || y >= t.order()) throw PreconditionError("vertex out of range");
  if (t.partner(x) != y) throw PreconditionError("seed is not a matching edge");
  require_perfect(t.matching(), t.host());
}

}  // namespace

Splice splice_case(const SpanningTreeWithMatching& t, Vertex x, Vertex y,
                   std::optional<Vertex> parent) {
  if (x >= t.order() || y >= t.order() || t.partner(x) != y)
    throw PreconditionError("splice requires a matching edge");
  LaceEngine engine(t, nullptr);
  return engine.splice(x, y, parent, 0, nullptr, nullptr);
}

HamPath hamilton_path_matched(const SpanningTreeWithMatching& t, Vertex x, Vertex y,
                              LaceStats* stats) {
  require_seed(t, x, y);
  LaceEngine engine(t, stats);
  return HamPath{engine.matched(x, y, 0, nullptr)};
}

MatchedPathTrace trace_hamilton_path_matched(const SpanningTreeWithMatching& t, Vertex x,
                                             Vertex y, LaceStats* stats) {
  require_seed(t, x, y);
  LaceEngine engine(t, stats);
  MatchedPathTrace trace;
  engine.matched(x, y, 0, &trace);
  return trace;
}

HamPath laceable_path(const Graph& g, const Matching& m, const SpanningTreeWithMatching& t,
                      Vertex u, Vertex v, LaceStats* stats) {
  if (u >= g.order() || v >= g.order()) throw PreconditionError("vertex out of range");
  if (!(t.host() == g)) throw PreconditionError("tree does not span this graph");
  if (!(t.matching() == m)) throw PreconditionError("tree does not carry this matching");
  require_perfect(m, g);
  if (u == v || t.depth(u) % 2 == t.depth(v) % 2) throw SameClass(u, v);
  LaceEngine engine(t, stats);
  HamPath out;
  out.vertices.reserve(g.order());
  engine.lace(u, v, 0, out.vertices);
  return out;
}

PathReport verify_hampath(const Graph& g, const SpanningTreeWithMatching& t, const HamPath& p,
                          Vertex u, Vertex v) {
  auto fail = [](std::string why, std::optional<std::size_t> at) {
    return PathReport{false, std::move(why), at};
  };
  const std::size_t n = g.order();
  if (t.order() != n) return fail("tree and graph differ in order", std::nullopt);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex a = p.vertices[i];
    if (a >= n) return fail("vertex out of range", i);
    if (seen[a]) return fail("vertex " + g.label(a) + " visited twice", i);
    seen[a] = true;
  }
  if (p.vertices.size() != n) return fail("path misses some vertices", std::nullopt);
  if (p.front() != u) return fail("path does not start at " + g.label(u), 0);
  if (p.back() != v) return fail("path does not end at " + g.label(v), n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vertex a = p.vertices[i];
    Vertex b = p.vertices[i + 1];
    auto pair = [&] { return "(" + g.label(a) + "," + g.label(b) + ")"; };
    auto dt = t.distance_at_most(a, b, 3);
    if (!dt) return fail("pair " + pair() + " is at tree distance above 3", i);
    if (*dt % 2 == 0) return fail("pair " + pair() + " is at even tree distance", i);
    auto dg = bounded_distance(g, a, b, 3);
    if (!dg || *dg % 2 == 0) return fail("pair " + pair() + " is not an edge of G^3_B", i);
  }
  return {};
}

}  // namespace bilace
