#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace bilace;
using namespace testing;

namespace {

std::set<Edge> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("graph rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph(2, {Edge(0, 0)}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {Edge(0, 1), Edge(1, 0)}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), PreconditionError);
}

TEST_CASE("adjacency is sorted and symmetric") {
  Graph g(5, {Edge(3, 0), Edge(0, 1), Edge(4, 0), Edge(2, 1)});
  auto n0 = g.neighbors(0);
  CHECK(std::vector<Vertex>(n0.begin(), n0.end()) == std::vector<Vertex>{1, 3, 4});
  for (const Edge& e : g.edges()) {
    CHECK(g.adjacent(e.u, e.v));
    CHECK(g.adjacent(e.v, e.u));
  }
  CHECK(g.size() == 4);
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(path_graph(4), 0) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(bfs_distances(k2(), 0) == std::vector<std::size_t>{0, 1});
  Graph two(4, {Edge(0, 1), Edge(2, 3)});
  CHECK(bfs_distances(two, 0) == std::vector<std::size_t>{0, 1, kUnreachable, kUnreachable});
  CHECK_THROWS(bfs_distances(two, 4));
}

TEST_CASE("bi-power examples") {
  Graph p4 = path_graph(4);
  Graph cube = bi_power(p4, 3);
  CHECK(edge_set(cube) == std::set<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)});
  CHECK(bi_power(p4, 2) == p4);
  CHECK(bi_power(k2(), 5) == k2());
}

TEST_CASE("bipartition examples") {
  Bipartition c4 = check_bipartition(cycle_graph(4));
  CHECK(c4.side == std::vector<Side>{Side::A, Side::B, Side::A, Side::B});
  Bipartition p4 = check_bipartition(path_graph(4));
  CHECK(p4.side == std::vector<Side>{Side::A, Side::B, Side::A, Side::B});
  // lowest vertex of each component gets A
  Bipartition two = check_bipartition(Graph(4, {Edge(0, 3), Edge(1, 2)}));
  CHECK(two.side == std::vector<Side>{Side::A, Side::A, Side::B, Side::B});
}

TEST_CASE("odd cycles are reported with a witness") {
  Graph c3 = cycle_graph(3);
  CHECK_THROWS_AS(check_bipartition(c3), OddCycleFound);
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    Graph g = random_graph(rng, 3 + rng.below(10), rng.below(25));
    try {
      Bipartition b = check_bipartition(g);
      CHECK(b.valid_for(g));
    } catch (const OddCycleFound& e) {
      const auto& c = e.cycle();
      REQUIRE(c.size() % 2 == 1);
      CHECK(std::set<Vertex>(c.begin(), c.end()).size() == c.size());
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST_CASE("edge cut examples") {
  std::vector<Vertex> left{0, 1};
  CHECK(edge_cut(cycle_graph(4), left).crossing == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});
  std::vector<Vertex> one{0};
  CHECK(edge_cut(k2(), one).crossing == std::vector<Edge>{Edge(0, 1)});
  std::vector<Vertex> half{0, 1, 2};
  CHECK(edge_cut(cycle_graph(6), half).crossing == std::vector<Edge>{Edge(0, 5), Edge(2, 3)});
  std::vector<Vertex> none;
  std::vector<Vertex> all{0, 1};
  CHECK_THROWS_AS(edge_cut(k2(), none), PreconditionError);
  CHECK_THROWS_AS(edge_cut(k2(), all), PreconditionError);
}

TEST_CASE("bi-power properties against an all-pairs oracle") {
  Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng.below(14);
    Graph g = round % 2 ? random_bipartite(rng, n, rng.below(3 * n)) : random_graph(rng, n, rng.below(2 * n));
    auto d = all_pairs(g);
    CHECK(bi_power(g, 1) == g);
    CHECK(bi_power(g, 2) == g);
    std::optional<Bipartition> bip;
    try {
      bip = check_bipartition(g);
    } catch (const OddCycleFound&) {
    }
    Graph previous = g;
    for (std::size_t k = 1; k <= 6; ++k) {
      Graph p = bi_power(g, k);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          bool expect = d[u][v] != kUnreachable && d[u][v] % 2 == 1 && d[u][v] <= k;
          CHECK(p.adjacent(u, v) == expect);
        }
      for (const Edge& e : previous.edges()) CHECK(p.adjacent(e.u, e.v));
      if (bip) CHECK(bip->valid_for(p));
      previous = std::move(p);
    }
  }
}

TEST_CASE("bounded distance agrees with bfs") {
  Rng rng(5);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(rng, 12, 18);
    auto d = all_pairs(g);
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v)
        for (std::size_t limit : {1u, 2u, 3u, 5u}) {
          auto b = bounded_distance(g, u, v, limit);
          if (d[u][v] <= limit)
            CHECK(b == d[u][v]);
          else
            CHECK_FALSE(b.has_value());
        }
  }
}

TEST_CASE("components and labels") {
  Graph g(5, {Edge(0, 1), Edge(2, 3)});
  CHECK(component_count(g) == 3);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(path_graph(5)));
  Graph p = path_graph(3);
  CHECK(p.find("p2") == Vertex{1});
  CHECK(p.find("2") == Vertex{2});
  CHECK_FALSE(p.find("q").has_value());
  CHECK(Graph(2, {}).label(1) == "1");
}
