#ifndef BILACE_ORACLE_HPP
#define BILACE_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bilace/graph.hpp"

namespace bilace {

/// Limits for exhaustive search. A search that hits any limit reports
/// kBudgetExceeded rather than a negative answer.
struct SearchBudget {
  std::size_t max_vertices = 14;
  std::uint64_t max_nodes = 50'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

enum class Verdict { kYes, kNo, kBudgetExceeded };

const char* to_string(Verdict v);

struct SearchResult {
  Verdict verdict = Verdict::kNo;
  /// Witness path (or cycle, first vertex not repeated) when verdict is kYes.
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking for a Hamilton u-v path, with dead-end and
/// connectivity pruning.
SearchResult hamilton_path_exists(const Graph& g, Vertex u, Vertex v,
                                  const SearchBudget& budget = {});

/// Exhaustive backtracking for a Hamilton cycle (needs at least 3 vertices).
SearchResult hamilton_cycle_exists(const Graph& g, const SearchBudget& budget = {});

/// True iff path is a Hamilton u-v path of g using only edges of g.
bool is_hamilton_path(const Graph& g, const std::vector<Vertex>& path, Vertex u, Vertex v);

struct LaceabilityEntry {
  Vertex u;
  Vertex v;
  SearchResult result;
};

struct LaceabilityTable {
  std::vector<LaceabilityEntry> entries;  // every cross-class pair u < v

  bool laceable() const;
  std::size_t count(Verdict v) const;
};

LaceabilityTable laceability_table(const Graph& g, const Bipartition& bip,
                                   const SearchBudget& budget = {});

}  // namespace bilace

#endif  // BILACE_ORACLE_HPP
