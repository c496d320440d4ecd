#include <chrono>
#include <cstdio>
#include <string>

#include "bilace/infinite.hpp"
#include "bilace/pipeline.hpp"
#include "bilace/zoo.hpp"

using namespace bilace;

namespace {

int failed = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failed;
}

std::string num(std::size_t x) { return std::to_string(x); }

bool check_holds(const ZooReport& r, const std::string& kind) {
  auto* c = r.find(kind);
  return c && c->holds && !c->skipped;
}

// Frozen edge sets of every layer agree across all radii, and each run
// passes its own stabilization checks.
bool stable_across_radii(const LazyGraph& lg, std::string& detail) {
  const NodeId x = lg.origin;
  const NodeId y = *lg.partner(x);
  std::vector<ArcApproximation> runs;
  for (std::size_t r : {8u, 16u, 32u, 50u}) runs.push_back(build_arc_approximation(lg, x, y, r));
  bool ok = true;
  std::size_t compared = 0;
  for (const auto& a : runs)
    if (!stabilization_report(a).ok()) ok = false;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    std::size_t common = std::min(runs[0].stabilized.size(), runs[k].stabilized.size());
    for (std::size_t i = 0; i < common; ++i, ++compared)
      if (runs[0].stabilized[i] != runs[k].stabilized[i]) ok = false;
    for (std::size_t i = 0; i < runs[k - 1].stabilized.size() && i < runs[k].stabilized.size(); ++i)
      if (runs[k - 1].stabilized[i] != runs[k].stabilized[i]) ok = false;
  }
  if (compared == 0) ok = false;
  detail += lg.name + " layers " + num(runs.back().stabilized.size()) + " compared " +
            num(compared) + "; ";
  return ok;
}

}  // namespace

int main() {
  CorpusConfig config;
  auto start = std::chrono::steady_clock::now();
  CorpusSummary s = run_corpus(config);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  {
    bool ok = s.graphs >= 200 && s.min_order >= 4 && s.max_order <= 200 && s.pairs > 0 &&
              s.verified == s.pairs && s.failures.empty() && secs < 120.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    report(1, ok,
           num(s.graphs) + " graphs, n in [" + num(s.min_order) + "," + num(s.max_order) + "], " +
               num(s.verified) + "/" + num(s.pairs) + " pairs verified, " + buf);
  }
  report(2,
         s.oracle_graphs > 0 && s.oracle_yes == s.oracle_pairs &&
             s.oracle_accepted == s.oracle_pairs && s.oracle_pairs > 0,
         num(s.oracle_graphs) + " graphs, " + num(s.oracle_yes) + " yes, " +
             num(s.oracle_accepted) + " accepted of " + num(s.oracle_pairs) + " pairs");
  report(3,
         s.failures.empty() && s.stats.layers_checked > 0 && s.stats.replacement_checks > 0 &&
             s.stats.matched_runs > 0,
         num(s.stats.matched_runs) + " runs, " + num(s.stats.layers_checked) + " layers, " +
             num(s.stats.replacement_checks) + " persistence checks, " +
             num(s.failures.size()) + " failures");
  report(4,
         s.failures.empty() && s.stats.case2_splits > 0 && s.stats.submatching_checks > 0,
         num(s.stats.case2_splits) + " case-2 splits, " + num(s.stats.case1_splits) +
             " case-1 splits, " + num(s.failures.size()) + " failures");

  {
    std::string detail;
    bool ok = true;
    try {
      ok = stable_across_radii(ray_generator(), detail) && ok;
      ok = stable_across_radii(ladder_generator(), detail) && ok;
    } catch (const std::exception& e) {
      ok = false;
      detail += e.what();
    }
    report(5, ok, detail);
  }

  {
    bool a = true;
    std::size_t exhaustive = 0;
    for (std::size_t k : {1u, 2u, 3u})
      for (std::size_t sv : {2u, 4u}) {
        ZooInstance z = build_L(k, sv);
        ZooReport r = verify(z);
        a = a && check_holds(r, "independent_majority") && check_holds(r, "no_perfect_matching");
        if (z.graph->order() <= 14)
          for (std::size_t l = 1; l <= sv; ++l) {
            a = a && check_holds(r, "no_hamilton_cycle_l" + std::to_string(l));
            ++exhaustive;
          }
      }
    ZooReport l3 = verify(build_L_subdivided(3));
    bool b = check_holds(l3, "cube_perfect_matching") &&
             (check_holds(l3, "degree_forcing_c1") || check_holds(l3, "degree_forcing_c2"));
    bool c = true;
    for (std::size_t k : {3u, 4u, 5u}) c = c && check_holds(verify(build_H_star_ray(k)), "leaf_neighbourhoods");
    bool d = ray_forcing(5).prefix == std::vector<std::int64_t>{2, 1, 4, 3, 6};
    report(6, a && b && c && d,
           std::string("(a) ") + (a ? "ok" : "fail") + " with " + num(exhaustive) +
               " exhaustive cycle checks, (b) " + (b ? "ok" : "fail") + ", (c) " +
               (c ? "ok" : "fail") + ", (d) " + (d ? "ok" : "fail"));
  }

  report(7, s.bipower_checks > 0 && s.bipower_failures == 0,
         num(s.bipower_checks) + " checks, " + num(s.bipower_failures) + " failures");

  {
    CorpusConfig again = config;
    again.threads = config.threads == 1 ? 2 : 1;
    std::string first = s.to_text();
    std::string second = run_corpus(again).to_text();
    report(8, first == second, num(first.size()) + " bytes, identical: " + (first == second ? "yes" : "no"));
  }

  return failed == 0 ? 0 : 1;
}
