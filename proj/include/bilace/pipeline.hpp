#ifndef BILACE_PIPELINE_HPP
#define BILACE_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bilace/io.hpp"
#include "bilace/lace.hpp"
#include "bilace/tree.hpp"

namespace bilace {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNoPerfectMatching = 2,
  kExitSameClass = 3,
  kExitVerifyFailure = 4,
  kExitBudget = 5,
};

/// Outcome of bipartition -> perfect matching -> tree -> path -> verify.
struct PipelineResult {
  int exit_code = kExitOk;
  std::string stage;  // failing stage, empty on success
  std::string message;
  std::optional<Bipartition> bipartition;
  std::optional<Matching> matching;
  std::optional<SpanningTreeWithMatching> tree;
  std::optional<HamPath> path;
  PathReport report;
  LaceStats stats;
  std::vector<Vertex> unmatched;
};

/// Uses the document's matching and tree when present, otherwise computes them.
PipelineResult run_pipeline(const GraphDocument& doc, Vertex u, Vertex v);

/// Distance certificate of a path: dist_T between consecutive vertices.
std::vector<std::size_t> tree_distances(const SpanningTreeWithMatching& t, const HamPath& p);

/// Platform-independent draws on top of mt19937_64 (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the i-th corpus instance derived from the corpus seed.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// Random connected bipartite graph on n (even) vertices with a perfect
/// matching: matched pairs joined by a random tree, then random chords
/// between the classes, then a random relabelling. The matching is part of
/// the document.
GraphDocument random_matched_graph(std::size_t n, Rng& rng);

struct CorpusConfig {
  std::size_t count = 200;
  std::size_t min_n = 4;
  std::size_t max_n = 200;
  std::uint64_t seed = 1;
  /// Graphs up to this order are cross-checked by exhaustive search.
  std::size_t oracle_max_n = 12;
  bool oracle = true;
  bool bipower_checks = true;
  /// 0 uses the hardware concurrency.
  std::size_t threads = 0;
};

struct CorpusSummary {
  std::uint64_t seed = 0;
  std::size_t graphs = 0;
  std::size_t min_order = 0;
  std::size_t max_order = 0;
  std::size_t pairs = 0;
  std::size_t verified = 0;
  std::size_t oracle_graphs = 0;
  std::size_t oracle_pairs = 0;
  std::size_t oracle_yes = 0;
  std::size_t oracle_accepted = 0;
  std::size_t bipower_checks = 0;
  std::size_t bipower_failures = 0;
  LaceStats stats;
  std::vector<std::string> failures;

  bool ok() const;
  std::string to_text() const;
};

CorpusSummary run_corpus(const CorpusConfig& config);

}  // namespace bilace

#endif  // BILACE_PIPELINE_HPP
