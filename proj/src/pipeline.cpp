#include "bilace/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "bilace/oracle.hpp"

namespace bilace {

PipelineResult run_pipeline(const GraphDocument& doc, Vertex u, Vertex v) {
  PipelineResult r;
  const Graph& g = doc.graph;
  auto fail = [&r](int code, std::string stage, std::string message) {
    r.exit_code = code;
    r.stage = std::move(stage);
    r.message = std::move(message);
    return r;
  };
  if (u >= g.order() || v >= g.order()) return fail(kExitUsage, "input", "endpoint out of range");

  try {
    r.bipartition = doc.bipartition ? *doc.bipartition : check_bipartition(g);
  } catch (const OddCycleFound& e) {
    return fail(kExitUsage, "bipartition", e.what());
  }
  if (!is_connected(g)) return fail(kExitUsage, "bipartition", "graph is not connected");

  r.matching = doc.matching ? *doc.matching : maximum_matching(g, *r.bipartition);
  if (!r.matching->is_perfect()) {
    r.unmatched = r.matching->unmatched();
    return fail(kExitNoPerfectMatching, "matching", "graph has no perfect matching");
  }

  try {
    if (doc.tree_parent) {
      const auto& parents = *doc.tree_parent;
      auto roots = std::count(parents.begin(), parents.end(), std::nullopt);
      if (roots != 1) return fail(kExitUsage, "tree", "tree_parent must have exactly one root");
      auto root = static_cast<Vertex>(std::find(parents.begin(), parents.end(), std::nullopt) -
                                      parents.begin());
      r.tree.emplace(g, root, parents, *r.matching);
    } else {
      r.tree.emplace(tree_with_matching(g, *r.matching));
    }
  } catch (const Error& e) {
    return fail(kExitUsage, "tree", e.what());
  }

  if (r.bipartition->same_class(u, v))
    return fail(kExitSameClass, "lace", "endpoints " + g.label(u) + " and " + g.label(v) +
                                            " lie in the same class");
  try {
    r.path = laceable_path(g, *r.matching, *r.tree, u, v, &r.stats);
  } catch (const InvariantViolation& e) {
    return fail(kExitVerifyFailure, "lace", e.what());
  }
  r.report = verify_hampath(g, *r.tree, *r.path, u, v);
  if (!r.report.ok) return fail(kExitVerifyFailure, "verify", r.report.violation);
  return r;
}

std::vector<std::size_t> tree_distances(const SpanningTreeWithMatching& t, const HamPath& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    out.push_back(t.distance(p.vertices[i], p.vertices[i + 1]));
  return out;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + index + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

GraphDocument random_matched_graph(std::size_t n, Rng& rng) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("random_matched_graph needs an even n >= 2");
  const std::size_t p = n / 2;
  // Before relabelling, pair i is {2i, 2i + 1} with 2i in class A.
  std::set<Edge> edges;
  for (std::size_t i = 0; i < p; ++i) edges.emplace(2 * i, 2 * i + 1);
  for (std::size_t i = 1; i < p; ++i) {
    auto j = rng.below(i);
    if (rng.below(2) == 0)
      edges.emplace(2 * i, 2 * j + 1);
    else
      edges.emplace(2 * i + 1, 2 * j);
  }
  const auto chords = rng.below(2 * n + 1);
  for (std::uint64_t c = 0; c < chords; ++c) {
    auto a = 2 * rng.below(p);
    auto b = 2 * rng.below(p) + 1;
    edges.emplace(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);

  std::vector<Edge> relabelled;
  for (const Edge& e : edges) relabelled.emplace_back(perm[e.u], perm[e.v]);
  GraphDocument doc;
  doc.graph = Graph(n, relabelled);
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < p; ++i) pairs.emplace_back(perm[2 * i], perm[2 * i + 1]);
  doc.matching = Matching::from_pairs(doc.graph, pairs);
  return doc;
}

namespace {

struct InstanceResult {
  std::size_t order = 0;
  std::size_t pairs = 0;
  std::size_t verified = 0;
  bool oracle = false;
  std::size_t oracle_pairs = 0;
  std::size_t oracle_yes = 0;
  std::size_t oracle_accepted = 0;
  std::size_t bipower_checks = 0;
  std::size_t bipower_failures = 0;
  LaceStats stats;
  std::vector<std::string> failures;
};

void bipower_identities(const Graph& g, const Bipartition& bip, InstanceResult& r,
                        const std::string& tag) {
  auto check = [&](bool ok, const std::string& what) {
    ++r.bipower_checks;
    if (!ok) {
      ++r.bipower_failures;
      r.failures.push_back(tag + ": " + what);
    }
  };
  check(bi_power(g, 1) == g, "bi_power(g,1) != g");
  check(bi_power(g, 2) == g, "bi_power(g,2) != g");
  Graph previous = g;
  for (std::size_t k = 3; k <= 5; ++k) {
    Graph power = bi_power(g, k);
    check(bip.valid_for(power), "bipartition not preserved at k=" + std::to_string(k));
    bool monotone = true;
    for (const Edge& e : previous.edges()) monotone = monotone && power.adjacent(e.u, e.v);
    check(monotone, "bi-power not monotone at k=" + std::to_string(k));
    previous = std::move(power);
  }
}

InstanceResult run_instance(const CorpusConfig& config, std::size_t index) {
  InstanceResult r;
  Rng rng(instance_seed(config.seed, index));
  const std::size_t lo = (std::max<std::size_t>(config.min_n, 2) + 1) / 2;
  const std::size_t hi = std::max(lo, config.max_n / 2);
  const std::size_t n = 2 * rng.between(lo, hi);
  const std::string tag = "graph " + std::to_string(index) + " (n=" + std::to_string(n) + ")";
  r.order = n;

  GraphDocument doc = random_matched_graph(n, rng);
  const Graph& g = doc.graph;
  const Matching& m = *doc.matching;
  Bipartition bip = check_bipartition(g);
  SpanningTreeWithMatching t = tree_with_matching(g, m);
  if (config.bipower_checks) bipower_identities(g, bip, r, tag);

  const bool oracle = config.oracle && n <= config.oracle_max_n;
  Graph cube;
  if (oracle) {
    r.oracle = true;
    cube = bi_power(g, 3);
    auto table = laceability_table(cube, bip);
    r.oracle_pairs = table.entries.size();
    r.oracle_yes = table.count(Verdict::kYes);
    if (!table.laceable()) r.failures.push_back(tag + ": oracle finds a pair without a path");
  }

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (bip.same_class(u, v)) continue;
      ++r.pairs;
      const std::string where = tag + " pair " + std::to_string(u) + "-" + std::to_string(v);
      try {
        HamPath p = laceable_path(g, m, t, u, v, &r.stats);
        PathReport report = verify_hampath(g, t, p, u, v);
        if (report.ok)
          ++r.verified;
        else
          r.failures.push_back(where + ": " + report.violation);
        if (oracle) {
          if (is_hamilton_path(cube, p.vertices, u, v))
            ++r.oracle_accepted;
          else
            r.failures.push_back(where + ": oracle rejects the constructed path");
        }
      } catch (const std::exception& e) {
        r.failures.push_back(where + ": " + e.what());
      }
    }
  return r;
}

}  // namespace

bool CorpusSummary::ok() const {
  return failures.empty() && verified == pairs && oracle_accepted == oracle_pairs &&
         oracle_yes == oracle_pairs && bipower_failures == 0;
}

std::string CorpusSummary::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << "\n"
      << "graphs " << graphs << "\n"
      << "order_range " << min_order << " " << max_order << "\n"
      << "pairs " << pairs << "\n"
      << "verified " << verified << "\n"
      << "oracle_graphs " << oracle_graphs << "\n"
      << "oracle_pairs " << oracle_pairs << "\n"
      << "oracle_yes " << oracle_yes << "\n"
      << "oracle_accepted " << oracle_accepted << "\n"
      << "bipower_checks " << bipower_checks << "\n"
      << "bipower_failures " << bipower_failures << "\n"
      << "matched_runs " << stats.matched_runs << "\n"
      << "layers_checked " << stats.layers_checked << "\n"
      << "replacement_checks " << stats.replacement_checks << "\n"
      << "case1_splits " << stats.case1_splits << "\n"
      << "case2_splits " << stats.case2_splits << "\n"
      << "submatching_checks " << stats.submatching_checks << "\n"
      << "failures " << failures.size() << "\n";
  for (const auto& f : failures) out << "  " << f << "\n";
  out << "status " << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

CorpusSummary run_corpus(const CorpusConfig& config) {
  if (config.min_n > config.max_n) throw PreconditionError("corpus needs min_n <= max_n");
  std::vector<InstanceResult> results(config.count);
  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(config.count, 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) results[i] = run_instance(config, i);
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CorpusSummary s;
  s.seed = config.seed;
  s.graphs = config.count;
  for (const auto& r : results) {
    s.min_order = s.min_order == 0 ? r.order : std::min(s.min_order, r.order);
    s.max_order = std::max(s.max_order, r.order);
    s.pairs += r.pairs;
    s.verified += r.verified;
    s.oracle_graphs += r.oracle ? 1 : 0;
    s.oracle_pairs += r.oracle_pairs;
    s.oracle_yes += r.oracle_yes;
    s.oracle_accepted += r.oracle_accepted;
    s.bipower_checks += r.bipower_checks;
    s.bipower_failures += r.bipower_failures;
    s.stats += r.stats;
    s.failures.insert(s.failures.end(), r.failures.begin(), r.failures.end());
  }
  return s;
}

}  // namespace bilace
