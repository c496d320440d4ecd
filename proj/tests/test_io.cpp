#include <doctest.h>

#include "bilace/io.hpp"
#include "support.hpp"

using namespace bilace;
using namespace testing;

TEST_CASE("json round trip with every annotation") {
  Graph g = path_graph(4);
  GraphDocument doc;
  doc.graph = g;
  doc.bipartition = check_bipartition(g);
  doc.matching = matching_of(g, {Edge(0, 1), Edge(2, 3)});
  doc.tree_parent = std::vector<std::optional<Vertex>>{std::nullopt, 0, 1, 2};
  std::string text = write_graph_json(doc);
  GraphDocument back = parse_graph_json(text);
  CHECK(back.graph == g);
  CHECK(back.graph.labels() == g.labels());
  CHECK(back.bipartition->side == doc.bipartition->side);
  CHECK(*back.matching == *doc.matching);
  CHECK(*back.tree_parent == *doc.tree_parent);
  CHECK(write_graph_json(back) == text);
}

TEST_CASE("json accepts the minimal form and numeric flags") {
  GraphDocument d = parse_graph_json(R"({"n": 3, "edges": [[0,1],[1,2]], "bipartition": [0,1,0]})");
  CHECK(d.graph.size() == 2);
  CHECK(d.bipartition->side == std::vector<Side>{Side::A, Side::B, Side::A});
  CHECK_FALSE(d.matching.has_value());
  CHECK(parse_graph_json(R"({"n": 0})").graph.order() == 0);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(parse_graph_json("{"), PreconditionError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), PreconditionError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0,2]]})"), PreconditionError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), PreconditionError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0,1]], "bipartition": ["A","A"]})"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 3, "edges": [[0,1],[1,2]], "matching": [[0,1],[1,2]]})"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "tree_parent": [null]})"), PreconditionError);
}

TEST_CASE("edge list round trip") {
  Graph g(5, {Edge(0, 1), Edge(3, 2)});
  std::string text = write_edge_list(g);
  CHECK(text == "# n 5\n0 1\n2 3\n");
  CHECK(parse_edge_list(text) == g);
  CHECK(parse_edge_list("# comment\n0 1\n\n1 2 # trailing\n") == path_graph(3));
  CHECK_THROWS_AS(parse_edge_list("0\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("# n 2\n0 5\n"), PreconditionError);
}

TEST_CASE("dot export marks matching edges bold") {
  Graph g = path_graph(4);
  Matching m = matching_of(g, {Edge(0, 1), Edge(2, 3)});
  std::vector<Vertex> path{1, 0, 3, 2};
  DotStyle style;
  style.matching = &m;
  style.path = &path;
  std::string dot = to_dot(g, style);
  CHECK(dot.rfind("graph \"G\" {", 0) == 0);
  CHECK(dot.find("\"p1\" -- \"p2\" [style=bold, color=red];") != std::string::npos);
  CHECK(dot.find("\"p2\" -- \"p3\";") != std::string::npos);
  CHECK(dot.find("\"p1\" -- \"p4\" [color=red, style=dashed];") != std::string::npos);
  CHECK(to_dot(Graph()).find("}") != std::string::npos);
}

TEST_CASE("vertices resolve by label or index") {
  Graph g = path_graph(3);
  CHECK(resolve_vertex(g, "p3") == 2);
  CHECK(resolve_vertex(g, "0") == 0);
  CHECK_THROWS_AS(resolve_vertex(g, "p9"), PreconditionError);
}
