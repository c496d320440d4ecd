#include "bilace/matching.hpp"

#include <algorithm>

namespace bilace {

Matching Matching::from_pairs(const Graph& g, std::span<const Edge> pairs) {
  Matching m(g.order());
  for (const Edge& e : pairs) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw PreconditionError("matching pair is not an edge of the graph");
    if (m.matched(e.u) || m.matched(e.v))
      throw PreconditionError("matching pairs are not vertex-disjoint");
    m.add(e);
  }
  return m;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < partner_.size(); ++v)
    if (partner_[v] && v < *partner_[v]) out.emplace_back(v, *partner_[v]);
  return out;
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(std::count_if(partner_.begin(), partner_.end(),
                                                [](const auto& p) { return p.has_value(); })) /
         2;
}

bool Matching::is_perfect() const {
  return std::all_of(partner_.begin(), partner_.end(), [](const auto& p) { return p.has_value(); });
}

std::vector<Vertex> Matching::unmatched() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < partner_.size(); ++v)
    if (!partner_[v]) out.push_back(v);
  return out;
}

void Matching::add(Edge e) {
  partner_.at(e.u) = e.v;
  partner_.at(e.v) = e.u;
}

void Matching::remove(Edge e) {
  partner_.at(e.u).reset();
  partner_.at(e.v).reset();
}

namespace {

// Augmenting-path search over the vertices not blocked; works from either side.
class Augmenter {
 public:
  Augmenter(const Graph& g, Matching& m, const std::vector<bool>& blocked)
      : g_(g), m_(m), blocked_(blocked), stamp_(g.order(), 0) {}

  bool augment_from(Vertex free_vertex) {
    ++round_;
    return search(free_vertex);
  }

 private:
  bool search(Vertex u) {
    stamp_[u] = round_;
    for (Vertex w : g_.neighbors(u)) {
      if (blocked_[w] || stamp_[w] == round_) continue;
      stamp_[w] = round_;
      auto mate = m_.partner(w);
      // A successful recursive search rematches *mate and frees w.
      if (!mate || (stamp_[*mate] != round_ && search(*mate))) {
        if (auto old = m_.partner(u)) m_.remove(Edge(u, *old));
        m_.add(Edge(u, w));
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  Matching& m_;
  const std::vector<bool>& blocked_;
  std::vector<unsigned> stamp_;
  unsigned round_ = 0;
};

}  // namespace

Matching maximum_matching(const Graph& g, const Bipartition& bip) {
  if (!bip.valid_for(g)) throw PreconditionError("bipartition is not valid for the graph");
  const std::size_t n = g.order();
  std::vector<bool> blocked(n, false);

  Matching best(n);
  {
    Augmenter aug(g, best, blocked);
    for (Vertex v = 0; v < n; ++v)
      if (bip.side[v] == Side::A && !best.matched(v)) aug.augment_from(v);
  }
  const std::size_t target = best.size();

  // Greedy over sorted edges: keep e if some maximum matching extends the
  // chosen prefix plus e. `best` is always such a matching.
  Matching chosen(n);
  for (const Edge& e : g.edges()) {
    if (chosen.matched(e.u) || chosen.matched(e.v)) continue;
    if (best.contains(e)) {
      chosen.add(e);
      blocked[e.u] = blocked[e.v] = true;
      continue;
    }
    Matching trial = best;
    std::vector<Vertex> freed;
    for (Vertex x : {e.u, e.v})
      if (auto p = trial.partner(x)) {
        trial.remove(Edge(x, *p));
        freed.push_back(*p);
      }
    std::vector<bool> trial_blocked = blocked;
    trial_blocked[e.u] = trial_blocked[e.v] = true;
    trial.add(e);
    // Any augmenting path of the residual matching must start at a freed
    // partner: otherwise it would augment `best`, which is maximum.
    Augmenter aug(g, trial, trial_blocked);
    for (Vertex f : freed)
      if (!trial.matched(f)) aug.augment_from(f);
    if (trial.size() == target) {
      best = std::move(trial);
      chosen.add(e);
      blocked = std::move(trial_blocked);
    }
  }
  return chosen;
}

const Matching& require_perfect(const Matching& m, const Graph& g) {
  if (m.order() != g.order()) throw PreconditionError("matching does not belong to this graph");
  if (!m.is_perfect()) throw NoPerfectMatching(m.unmatched());
  return m;
}

}  // namespace bilace
