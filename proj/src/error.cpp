#include "bilace/error.hpp"

#include <sstream>

namespace bilace {

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

}  // namespace

OddCycleFound::OddCycleFound(std::vector<Vertex> cycle)
    : Error("graph is not bipartite; odd cycle: " + join(cycle)), cycle_(std::move(cycle)) {}

NoPerfectMatching::NoPerfectMatching(std::vector<Vertex> unmatched)
    : Error("no perfect matching; unmatched vertices: " + join(unmatched)),
      unmatched_(std::move(unmatched)) {}

SameClass::SameClass(Vertex u, Vertex v)
    : Error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
            " lie in the same bipartition class"),
      u_(u),
      v_(v) {}

}  // namespace bilace
