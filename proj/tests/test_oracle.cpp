#include <doctest.h>

#include "bilace/oracle.hpp"
#include "bilace/zoo.hpp"
#include "support.hpp"

using namespace bilace;
using namespace testing;

TEST_CASE("hamilton path examples") {
  SearchResult a = hamilton_path_exists(k2(), 0, 1);
  CHECK(a.verdict == Verdict::kYes);
  CHECK(a.witness == std::vector<Vertex>{0, 1});

  SearchResult b = hamilton_path_exists(bi_power(path_graph(4), 3), 1, 2);
  CHECK(b.verdict == Verdict::kYes);
  CHECK(b.witness == std::vector<Vertex>{1, 0, 3, 2});

  CHECK(hamilton_path_exists(star_graph(3), 1, 2).verdict == Verdict::kNo);
  CHECK_THROWS_AS(hamilton_path_exists(k2(), 0, 0), PreconditionError);
}

TEST_CASE("hamilton cycle examples") {
  SearchResult c4 = hamilton_cycle_exists(cycle_graph(4));
  CHECK(c4.verdict == Verdict::kYes);
  CHECK(c4.witness.size() == 4);
  ZooInstance l = build_L(1, 4);
  CHECK(hamilton_cycle_exists(bi_power(*l.graph, 3)).verdict == Verdict::kNo);
  CHECK(hamilton_cycle_exists(k2()).verdict == Verdict::kNo);
}

TEST_CASE("laceability table examples") {
  Graph c4 = cycle_graph(4);
  LaceabilityTable t = laceability_table(c4, check_bipartition(c4));
  CHECK(t.entries.size() == 4);
  CHECK(t.laceable());

  Graph p4 = path_graph(4);
  LaceabilityTable raw = laceability_table(p4, check_bipartition(p4));
  CHECK_FALSE(raw.laceable());
  for (const auto& e : raw.entries)
    if (e.u == 1 && e.v == 2) CHECK(e.result.verdict == Verdict::kNo);

  Graph cube = bi_power(p4, 3);
  CHECK(laceability_table(cube, check_bipartition(p4)).laceable());
}

TEST_CASE("the budget is reported, never read as no") {
  SearchBudget small;
  small.max_vertices = 3;
  CHECK(hamilton_path_exists(path_graph(4), 0, 3, small).verdict == Verdict::kBudgetExceeded);
  SearchBudget few;
  few.max_nodes = 2;
  CHECK(hamilton_cycle_exists(cycle_graph(10), few).verdict == Verdict::kBudgetExceeded);
}

TEST_CASE("oracle agrees with permutation enumeration") {
  Rng rng(41);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 2 + rng.below(6);
    Graph g = random_graph(rng, n, rng.below(n * 2));
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<bool>> path(n, std::vector<bool>(n, false));
    bool cycle = false;
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
      if (!ok) continue;
      path[perm.front()][perm.back()] = true;
      if (n >= 3 && g.adjacent(perm.back(), perm.front())) cycle = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK((hamilton_cycle_exists(g).verdict == Verdict::kYes) == cycle);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        SearchResult r = hamilton_path_exists(g, u, v);
        CHECK((r.verdict == Verdict::kYes) == path[u][v]);
        if (r.verdict == Verdict::kYes) CHECK(is_hamilton_path(g, r.witness, u, v));
      }
  }
}
