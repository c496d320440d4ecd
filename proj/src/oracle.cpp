#include "bilace/oracle.hpp"

#include <algorithm>
#include <bit>

namespace bilace {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

/// Backtracking over bitmask adjacency. Supports up to 64 vertices.
class Search {
 public:
  Search(const Graph& g, const SearchBudget& budget)
      : n_(g.order()), adj_(g.order(), 0), budget_(budget),
        deadline_(std::chrono::steady_clock::now() + budget.time_limit) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
  }

  // Extends path ending at `end` over `unvisited` until it covers all and
  // ends at target (path mode) or can close to `start` (cycle mode).
  bool run(Vertex start, Vertex target, bool cycle, SearchResult& out) {
    start_ = start;
    target_ = target;
    cycle_ = cycle;
    path_.assign(1, start);
    Mask unvisited = (n_ == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n_)) - 1)) & ~bit(start);
    bool found = extend(start, unvisited);
    out.nodes = nodes_;
    if (found) {
      out.verdict = Verdict::kYes;
      out.witness = path_;
    } else {
      out.verdict = aborted_ ? Verdict::kBudgetExceeded : Verdict::kNo;
    }
    return found;
  }

 private:
  bool extend(Vertex end, Mask unvisited) {
    if (aborted_) return false;
    if (++nodes_ > budget_.max_nodes ||
        ((nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      aborted_ = true;
      return false;
    }
    if (unvisited == 0) return cycle_ ? (adj_[end] & bit(start_)) != 0 : end == target_;
    if (!cycle_ && end == target_) return false;
    if (!feasible(end, unvisited)) return false;

    Mask options = adj_[end] & unvisited;
    while (options) {
      Vertex w = static_cast<Vertex>(std::countr_zero(options));
      options &= options - 1;
      path_.push_back(w);
      if (extend(w, unvisited & ~bit(w))) return true;
      path_.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  // Pruning that never discards a solvable state.
  bool feasible(Vertex end, Mask unvisited) const {
    // Each unvisited vertex needs two usable neighbours, one if it can be the
    // last vertex (the target in path mode; any neighbour of start in cycle
    // mode is still interior, so it needs two counting start).
    Mask usable = unvisited | bit(end) | (cycle_ ? bit(start_) : 0);
    for (Mask rest = unvisited; rest; rest &= rest - 1) {
      Vertex w = static_cast<Vertex>(std::countr_zero(rest));
      int need = (!cycle_ && w == target_) ? 1 : 2;
      if (std::popcount(adj_[w] & usable & ~bit(w)) < need) return false;
    }
    // unvisited plus end must be connected.
    Mask reach = bit(end);
    Mask frontier = reach;
    Mask allowed = unvisited | bit(end);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= allowed & ~reach;
      reach |= next;
      frontier = next;
    }
    return (reach & allowed) == allowed;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  Vertex target_ = 0;
  bool cycle_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

bool too_large(const Graph& g, const SearchBudget& budget) {
  return g.order() > budget.max_vertices || g.order() > 64;
}

}  // namespace

SearchResult hamilton_path_exists(const Graph& g, Vertex u, Vertex v,
                                  const SearchBudget& budget) {
  if (u >= g.order() || v >= g.order() || u == v)
    throw PreconditionError("Hamilton path endpoints must be distinct vertices");
  SearchResult out;
  if (too_large(g, budget)) {
    out.verdict = Verdict::kBudgetExceeded;
    return out;
  }
  Search(g, budget).run(u, v, false, out);
  return out;
}

SearchResult hamilton_cycle_exists(const Graph& g, const SearchBudget& budget) {
  SearchResult out;
  if (too_large(g, budget)) {
    out.verdict = Verdict::kBudgetExceeded;
    return out;
  }
  if (g.order() < 3) return out;
  Search(g, budget).run(0, 0, true, out);
  return out;
}

bool is_hamilton_path(const Graph& g, const std::vector<Vertex>& path, Vertex u, Vertex v) {
  if (path.size() != g.order() || path.empty() || path.front() != u || path.back() != v)
    return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex w : path) {
    if (w >= g.order() || seen[w]) return false;
    seen[w] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1])) return false;
  return true;
}

bool LaceabilityTable::laceable() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.result.verdict == Verdict::kYes; });
}

std::size_t LaceabilityTable::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [v](const auto& e) { return e.result.verdict == v; }));
}

LaceabilityTable laceability_table(const Graph& g, const Bipartition& bip,
                                   const SearchBudget& budget) {
  if (!bip.valid_for(g)) throw PreconditionError("bipartition is not valid for the graph");
  LaceabilityTable table;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!bip.same_class(u, v)) table.entries.push_back({u, v, hamilton_path_exists(g, u, v, budget)});
  return table;
}

}  // namespace bilace
