#include <doctest.h>

#include "bilace/infinite.hpp"
#include "support.hpp"

using namespace bilace;

namespace {

NodeId id(std::int64_t i, std::int64_t j = 0, std::int32_t kind = 0) { return {kind, i, j}; }

std::vector<std::string> names(const LazyGraph& lg, const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  for (const auto& v : ids) out.push_back(lg.name_of(v));
  return out;
}

}  // namespace

TEST_CASE("ball examples") {
  LazyGraph ray = ray_generator();
  Ball b = ball(ray, id(1), 3);
  CHECK(b.graph.order() == 4);
  CHECK(b.graph.size() == 3);
  CHECK(names(ray, b.ids) == std::vector<std::string>{"r1", "r2", "r3", "r4"});
  CHECK(b.depth[*b.find(id(4))] == 3);

  LazyGraph half = half_ladder_generator();
  Ball corner = ball(half, half.origin, 1);
  CHECK(corner.graph.order() == 3);
  CHECK(corner.graph.size() == 2);

  LazyGraph full = ladder_generator();
  Ball inner = ball(full, full.origin, 1);
  CHECK(inner.graph.order() == 4);

  LazyGraph layered = layered_generator(2, 4);
  Ball lb = ball(layered, layered.origin, 2);
  CHECK(lb.graph.order() == layered_base_size(2, 4) + 2 + 2);
  for (const auto& v : lb.ids) CHECK(v.i <= 2);
}

TEST_CASE("lazy oracles are checked") {
  LazyGraph bad = ray_generator();
  bad.neighbors = [](const NodeId& v) { return std::vector<NodeId>{id(v.i + 1)}; };
  CHECK_THROWS_AS(ball(bad, id(1), 3), LocalFinitenessError);

  LazyGraph wide = ray_generator();
  wide.degree_bound = 1;
  CHECK_THROWS_AS(ball(wide, id(3), 1), LocalFinitenessError);

  LazyGraph repeat = ray_generator();
  repeat.neighbors = [](const NodeId& v) { return std::vector<NodeId>{id(v.i + 1), id(v.i + 1)}; };
  CHECK_THROWS_AS(repeat.checked_neighbors(id(1)), LocalFinitenessError);
}

TEST_CASE("generator catalog") {
  CHECK(builtin_generator("ray").degree_bound == std::size_t{2});
  CHECK_THROWS_AS(builtin_generator("nope"), PreconditionError);
  CHECK_THROWS_AS(builtin_generator("H_star:2"), PreconditionError);
  CHECK(builtin_generator("H_layered:2:3").name == "H_layered:2:3");
  for (const auto& name : builtin_generator_names()) {
    if (name.find(':') != std::string::npos) continue;
    LazyGraph g = builtin_generator(name);
    CHECK(g.name == name);
    Ball b = ball(g, g.origin, 6);
    CHECK_NOTHROW(check_bipartition(b.graph));
    for (const auto& v : b.ids) CHECK(g.parse(g.name_of(v)) == v);
  }

  LazyGraph f = figure1_generator();
  Ball fb = ball(f, f.origin, 12);
  for (const Edge& e : fb.graph.edges()) {
    NodeId a = fb.ids[e.u];
    NodeId b = fb.ids[e.v];
    bool same_side = a.i == b.i && (a.j - b.j == 1 || b.j - a.j == 1);
    bool rung = a.i != b.i && a.j == b.j && a.j >= 2 && a.j % 2 == 0;
    CHECK((same_side || rung));
  }
  CHECK(f.partner(id(1, 4)) == id(1, 5));
  CHECK(f.partner(id(2, 7)) == id(2, 6));

  LazyGraph ladder = ladder_generator();
  CHECK(ladder.cut_locality == 1);
  Ball lb = ball(ladder, ladder.origin, 5);
  CHECK_NOTHROW(check_bipartition(lb.graph));
  for (const auto& v : lb.ids) {
    auto p = ladder.partner(v);
    REQUIRE(p.has_value());
    CHECK(p->i == v.i);
    CHECK(p->j == 1 - v.j);
  }
}

TEST_CASE("ray approximation") {
  LazyGraph ray = ray_generator();
  ArcApproximation a = build_arc_approximation(ray, id(1), id(2), 6);
  CHECK(a.layers.size() == 7);
  CHECK(a.stabilized.size() == 6);
  CHECK_FALSE(a.exhausted);
  CHECK(names(ray, a.paths[1]) == std::vector<std::string>{"r1", "r4", "r3", "r2"});
  CHECK(names(ray, a.paths[6]).front() == "r1");
  CHECK(names(ray, a.paths[6]).back() == "r2");
  CHECK_FALSE(a.warnings.empty());
  StabilizationReport r = stabilization_report(a);
  CHECK(r.ok());
  CHECK(r.layers.size() == 7);
  for (std::size_t i = 0; i + 1 < a.paths.size(); ++i)
    for (std::size_t m = i + 1; m < a.paths.size(); ++m) {
      std::vector<NodeEdge> restricted;
      for (std::size_t j = 0; j + 1 < a.paths[m].size(); ++j) {
        NodeEdge e(a.paths[m][j], a.paths[m][j + 1]);
        auto in = [&](const NodeId& v) {
          return std::binary_search(a.layers[i].begin(), a.layers[i].end(), v);
        };
        if (in(e.first) && in(e.second)) restricted.push_back(e);
      }
      std::sort(restricted.begin(), restricted.end());
      CHECK(restricted == a.stabilized[i]);
    }
}

TEST_CASE("k2 as a lazy graph has a single layer") {
  LazyGraph g = k2_generator();
  ArcApproximation a = build_arc_approximation(g, id(0), id(1), 4);
  CHECK(a.exhausted);
  CHECK(a.layers.size() == 1);
  CHECK(a.paths.front().size() == 2);
  CHECK(stabilization_report(a).ok());
}

TEST_CASE("approximation preconditions") {
  LazyGraph ray = ray_generator();
  CHECK_THROWS_AS(build_arc_approximation(ray, id(2), id(3), 4), PreconditionError);
  CHECK_THROWS_AS(build_arc_approximation(ray, id(1), id(2), 0), RadiusError);
  ApproxOptions tiny;
  tiny.max_vertices = 10;
  CHECK_THROWS_AS(build_arc_approximation(ray, id(1), id(2), 30, tiny), RadiusError);
  CHECK_THROWS_AS(build_arc_approximation(layered_generator(2, 2), id(0), id(1, 0), 3),
                  PreconditionError);
}

TEST_CASE("every generator with a tree stabilizes") {
  struct Case {
    const char* name;
    NodeId x;
    NodeId y;
  };
  for (const Case& c : {Case{"ray", id(1), id(2)}, Case{"ray", id(5), id(6)},
                        Case{"double_ray", id(0), id(1)}, Case{"double_ray", id(-4), id(-3)},
                        Case{"ladder", id(0, 0), id(0, 1)}, Case{"ladder", id(3, 0), id(3, 1)},
                        Case{"half_ladder", id(0, 0), id(0, 1)},
                        Case{"figure1", id(1, 0), id(1, 1)}, Case{"figure1", id(2, 4), id(2, 5)}}) {
    LazyGraph g = builtin_generator(c.name);
    for (std::size_t radius : {4u, 9u, 20u}) {
      ArcApproximation a = build_arc_approximation(g, c.x, c.y, radius);
      StabilizationReport r = stabilization_report(a);
      INFO(c.name, " radius ", radius);
      CHECK(r.ok());
      CHECK(a.stats.layers_checked == a.layers.size());
    }
  }
}

TEST_CASE("frozen sets agree across radii") {
  LazyGraph ladder = ladder_generator();
  ArcApproximation small = build_arc_approximation(ladder, id(0, 0), id(0, 1), 8);
  ArcApproximation large = build_arc_approximation(ladder, id(0, 0), id(0, 1), 24);
  for (std::size_t i = 0; i < small.stabilized.size(); ++i)
    CHECK(small.stabilized[i] == large.stabilized[i]);
}

TEST_CASE("corrupted approximations are rejected") {
  LazyGraph ray = ray_generator();
  ArcApproximation base = build_arc_approximation(ray, id(1), id(2), 8);
  REQUIRE(stabilization_report(base).ok());

  SUBCASE("a swap inside one path") {
    ArcApproximation a = base;
    auto& p = a.paths[5];
    std::swap(p[1], p[2]);
    StabilizationReport r = stabilization_report(a);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.layers[5].ok);
    CHECK(*r.first_divergence <= 5);
  }
  SUBCASE("an altered frozen set") {
    ArcApproximation a = base;
    a.stabilized[3].pop_back();
    StabilizationReport r = stabilization_report(a);
    CHECK(r.first_divergence == std::size_t{3});
  }
  SUBCASE("a path with a wrong endpoint") {
    ArcApproximation a = base;
    std::reverse(a.paths[2].begin(), a.paths[2].end());
    CHECK_FALSE(stabilization_report(a).layers[2].ok);
  }
}

TEST_CASE("cut locality spot checks") {
  for (const char* name : {"ray", "double_ray", "ladder", "half_ladder", "figure1"}) {
    LazyGraph g = builtin_generator(name);
    CutLocalityReport r = check_cut_locality(g, g.origin, 8);
    INFO(name);
    CHECK(r.ok());
    CHECK(r.edges_checked > 0);
  }
  LazyGraph lying = figure1_generator();
  lying.cut_locality = 0;
  CHECK_FALSE(check_cut_locality(lying, lying.origin, 8).ok());
}
