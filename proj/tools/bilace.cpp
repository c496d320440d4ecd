#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bilace/infinite.hpp"
#include "bilace/io.hpp"
#include "bilace/oracle.hpp"
#include "bilace/pipeline.hpp"
#include "bilace/zoo.hpp"

using namespace bilace;

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join_labels(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

int report_failure(const PipelineResult& r, const Graph& g) {
  std::cerr << "error [" << r.stage << "]: " << r.message << "\n";
  if (!r.unmatched.empty()) std::cerr << "unmatched: " << join_labels(g, r.unmatched) << "\n";
  return r.exit_code;
}

int cmd_bipower(const std::string& graph, std::size_t k, const std::string& out) {
  GraphDocument doc = read_graph_file(graph);
  GraphDocument result;
  result.graph = bi_power(doc.graph, k);
  if (doc.graph.has_labels()) result.graph.set_labels(doc.graph.labels());
  emit(out, write_graph_json(result));
  return kExitOk;
}

int cmd_match(const std::string& graph, const std::string& out) {
  GraphDocument doc = read_graph_file(graph);
  const Graph& g = doc.graph;
  Bipartition bip = check_bipartition(g);
  Matching m = maximum_matching(g, bip);
  for (const Edge& e : m.pairs()) std::cout << g.label(e.u) << " " << g.label(e.v) << "\n";
  if (!out.empty()) {
    doc.bipartition = bip;
    doc.matching = m;
    write_text_file(out, write_graph_json(doc));
  }
  if (!m.is_perfect()) {
    std::cerr << "error [matching]: no perfect matching; unmatched: "
              << join_labels(g, m.unmatched()) << "\n";
    return kExitNoPerfectMatching;
  }
  return kExitOk;
}

int cmd_tree(const std::string& graph, const std::string& out) {
  GraphDocument doc = read_graph_file(graph);
  const Graph& g = doc.graph;
  Matching m = doc.matching ? *doc.matching : maximum_matching(g, check_bipartition(g));
  if (!m.is_perfect()) {
    std::cerr << "error [matching]: no perfect matching; unmatched: "
              << join_labels(g, m.unmatched()) << "\n";
    return kExitNoPerfectMatching;
  }
  SpanningTreeWithMatching t = tree_with_matching(g, m);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto p = t.parent(v);
    std::cout << g.label(v) << " " << (p ? g.label(*p) : "-") << "\n";
  }
  if (!out.empty()) {
    doc.matching = m;
    doc.tree_parent = t.parents();
    write_text_file(out, write_graph_json(doc));
  }
  return kExitOk;
}

int cmd_lace(const std::string& graph, const std::string& from, const std::string& to,
             const std::string& dot) {
  GraphDocument doc = read_graph_file(graph);
  const Graph& g = doc.graph;
  PipelineResult r = run_pipeline(doc, resolve_vertex(g, from), resolve_vertex(g, to));
  if (r.exit_code != kExitOk) return report_failure(r, g);
  std::cout << join_labels(g, r.path->vertices) << "\n";
  std::cout << "dist_T:";
  for (auto d : tree_distances(*r.tree, *r.path)) std::cout << " " << d;
  std::cout << "\n";
  if (!dot.empty()) {
    DotStyle style;
    style.matching = &*r.matching;
    style.path = &r.path->vertices;
    write_text_file(dot, to_dot(g, style));
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph, const std::string& path_text) {
  GraphDocument doc = read_graph_file(graph);
  const Graph& g = doc.graph;
  HamPath p;
  for (const auto& w : split_words(path_text)) p.vertices.push_back(resolve_vertex(g, w));
  if (p.vertices.size() < 2) {
    std::cerr << "error [verify]: path needs at least two vertices\n";
    return kExitUsage;
  }
  PipelineResult r = run_pipeline(doc, p.front(), p.back());
  if (r.exit_code != kExitOk && r.stage != "verify" && r.stage != "lace")
    return report_failure(r, g);
  PathReport report = verify_hampath(g, *r.tree, p, p.front(), p.back());
  if (!report.ok) {
    std::cout << "FAIL " << report.violation << "\n";
    return kExitVerifyFailure;
  }
  std::cout << "OK\n";
  return kExitOk;
}

int cmd_approx(const std::string& generator, const std::string& seed, std::size_t radius,
               const std::string& dot, bool as_json) {
  LazyGraph lg = builtin_generator(generator);
  auto ends = split_words(seed);
  if (ends.size() != 2) {
    std::cerr << "error [approx]: --seed needs two vertex names\n";
    return kExitUsage;
  }
  auto x = lg.parse ? lg.parse(ends[0]) : std::nullopt;
  auto y = lg.parse ? lg.parse(ends[1]) : std::nullopt;
  if (!x || !y) {
    std::cerr << "error [approx]: unknown seed vertex\n";
    return kExitUsage;
  }
  ArcApproximation a = build_arc_approximation(lg, *x, *y, radius);
  StabilizationReport rep = stabilization_report(a);
  auto names = [&](const std::vector<NodeId>& ids) {
    std::vector<std::string> out;
    for (const auto& id : ids) out.push_back(lg.name_of(id));
    return out;
  };
  if (as_json) {
    nlohmann::json j;
    j["generator"] = lg.name;
    j["seed"] = {lg.name_of(a.x), lg.name_of(a.y)};
    j["radius"] = a.radius;
    j["exhausted"] = a.exhausted;
    j["layer_sizes"] = nlohmann::json::array();
    for (const auto& l : a.layers) j["layer_sizes"].push_back(l.size());
    j["path"] = names(a.paths.back());
    j["frozen"] = nlohmann::json::array();
    for (const auto& layer : a.stabilized) {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& e : layer) edges.push_back({lg.name_of(e.first), lg.name_of(e.second)});
      j["frozen"].push_back(std::move(edges));
    }
    j["stabilization_ok"] = rep.ok();
    j["warnings"] = a.warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "generator " << lg.name << "\n"
              << "seed " << lg.name_of(a.x) << " " << lg.name_of(a.y) << "\n"
              << "radius " << a.radius << (a.exhausted ? " (exhausted)" : "") << "\n";
    for (std::size_t i = 0; i < a.layers.size(); ++i) {
      std::cout << "layer " << i << ": " << a.layers[i].size() << " vertices";
      if (i < a.stabilized.size()) std::cout << ", " << a.stabilized[i].size() << " frozen edges";
      std::cout << "\n";
    }
    std::string path;
    for (const auto& n : names(a.paths.back())) path += (path.empty() ? "" : " ") + n;
    std::cout << "A_" << a.paths.size() - 1 << ": " << path << "\n";
    for (const auto& c : rep.layers)
      if (!c.ok) std::cout << "layer " << c.layer << " FAIL " << c.detail << "\n";
    for (const auto& w : a.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "stabilization " << (rep.ok() ? "OK" : "FAIL") << "\n";
  }
  if (!dot.empty()) {
    DotStyle style;
    style.name = lg.name;
    style.matching = &a.tree->matching();
    std::vector<Vertex> path;
    for (const auto& id : a.paths.back()) path.push_back(*a.last_layer.find(id));
    style.path = &path;
    Graph g = a.last_layer.graph;
    std::vector<std::string> labels;
    for (const auto& id : a.last_layer.ids) labels.push_back(lg.name_of(id));
    g.set_labels(std::move(labels));
    write_text_file(dot, to_dot(g, style));
  }
  return rep.ok() ? kExitOk : kExitVerifyFailure;
}

int cmd_zoo(const std::string& family, std::size_t k, std::size_t s, std::size_t radius,
            const std::string& json_out, bool check) {
  ZooInstance z = build_family(family, k, s);
  std::cout << "instance " << z.name << "\n";
  if (!json_out.empty()) {
    GraphDocument doc;
    if (z.graph) {
      doc.graph = *z.graph;
    } else {
      Ball b = ball(*z.lazy, z.lazy->origin, radius ? radius : 8);
      doc.graph = b.graph;
      std::vector<std::string> labels;
      for (const auto& id : b.ids) labels.push_back(z.lazy->name_of(id));
      doc.graph.set_labels(std::move(labels));
    }
    write_text_file(json_out, write_graph_json(doc));
  }
  if (z.graph) std::cout << "order " << z.graph->order() << "\nsize " << z.graph->size() << "\n";
  if (!check) return kExitOk;
  ZooOptions options;
  options.radius = radius;
  ZooReport r = verify(z, options);
  for (const auto& c : r.checks)
    std::cout << (c.skipped ? "SKIP " : c.holds ? "OK   " : "FAIL ") << c.kind << ": " << c.detail
              << "\n";
  for (const auto& [key, value] : r.metrics) std::cout << "metric " << key << " " << value << "\n";
  return r.ok() ? kExitOk : kExitVerifyFailure;
}

int cmd_oracle(const std::string& graph, const std::string& mode, std::size_t power,
               const std::string& from, const std::string& to) {
  GraphDocument doc = read_graph_file(graph);
  Graph g = power > 1 ? bi_power(doc.graph, power) : doc.graph;
  if (doc.graph.has_labels()) g.set_labels(doc.graph.labels());
  if (mode == "laceability") {
    auto table = laceability_table(g, check_bipartition(g));
    for (const auto& e : table.entries) {
      std::cout << g.label(e.u) << " " << g.label(e.v) << " " << to_string(e.result.verdict);
      if (e.result.verdict == Verdict::kYes) std::cout << ": " << join_labels(g, e.result.witness);
      std::cout << "\n";
    }
    bool budget = table.count(Verdict::kBudgetExceeded) > 0;
    std::cout << (table.laceable() ? "laceable" : budget ? "undecided" : "not laceable") << "\n";
    return budget ? kExitBudget : kExitOk;
  }
  SearchResult r;
  if (mode == "path")
    r = hamilton_path_exists(g, resolve_vertex(g, from), resolve_vertex(g, to));
  else if (mode == "cycle")
    r = hamilton_cycle_exists(g);
  else
    throw PreconditionError("unknown oracle mode '" + mode + "'");
  std::cout << to_string(r.verdict);
  if (r.verdict == Verdict::kYes) std::cout << ": " << join_labels(g, r.witness);
  std::cout << "\n";
  return r.verdict == Verdict::kBudgetExceeded ? kExitBudget : kExitOk;
}

int cmd_corpus(const CorpusConfig& config, const std::string& out) {
  CorpusSummary s = run_corpus(config);
  emit(out, s.to_text());
  return s.ok() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton-laceability of bi-cubes: constructions, counterexamples, oracles"};
  app.require_subcommand(1);

  std::string graph, out, from, to, dot, path_text, generator, seed_pair, family, mode = "laceability";
  std::size_t k = 3, s = 2, radius = 0, approx_radius = 32, power = 1;
  bool check = false, as_json = false;
  CorpusConfig corpus;
  bool no_oracle = false;

  auto* bp = app.add_subcommand("bipower", "Write the k-th bi-power as JSON");
  bp->add_option("--graph", graph, "Input graph (.json or edge list)")->required();
  bp->add_option("--k", k, "Power")->check(CLI::PositiveNumber);
  bp->add_option("--out", out, "Output file (default stdout)");

  auto* mt = app.add_subcommand("match", "Lexicographically least maximum matching");
  mt->add_option("--graph", graph)->required();
  mt->add_option("--out", out, "Write the annotated graph JSON");

  auto* tr = app.add_subcommand("tree", "Spanning tree containing the perfect matching");
  tr->add_option("--graph", graph)->required();
  tr->add_option("--out", out, "Write the annotated graph JSON");

  auto* la = app.add_subcommand("lace", "Hamilton path of the bi-cube between two vertices");
  la->add_option("--graph", graph)->required();
  la->add_option("--from", from)->required();
  la->add_option("--to", to)->required();
  la->add_option("--emit-dot", dot, "Write the graph with the path highlighted");

  auto* ve = app.add_subcommand("verify", "Check a vertex sequence as a Hamilton path of the bi-cube");
  ve->add_option("--graph", graph)->required();
  ve->add_option("--path", path_text, "Vertex names separated by spaces")->required();

  auto* ap = app.add_subcommand("approx", "Arc approximation on a builtin infinite graph");
  ap->add_option("--generator", generator)->required();
  ap->add_option("--seed", seed_pair, "Matching edge \"u v\"")->required();
  ap->add_option("--radius", approx_radius, "Layer steps")->capture_default_str();
  ap->add_option("--emit-dot", dot);
  ap->add_flag("--json", as_json, "Machine-readable summary");

  auto* zo = app.add_subcommand("zoo", "Counterexample families and their certificates");
  zo->add_option("--family", family, "L, H_layered, L_sub, H_star, ray, figure1")->required();
  zo->add_option("--k", k);
  zo->add_option("--s", s, "s for L, l for H_layered");
  zo->add_option("--radius", radius, "Truncation radius for infinite families");
  zo->add_option("--emit-json", out);
  zo->add_flag("--verify", check);

  auto* orc = app.add_subcommand("oracle", "Exhaustive Hamilton path/cycle search");
  orc->add_option("--graph", graph)->required();
  orc->add_option("--mode", mode, "laceability, path or cycle");
  orc->add_option("--power", power, "Search in this bi-power of the graph")->check(CLI::PositiveNumber);
  orc->add_option("--from", from);
  orc->add_option("--to", to);

  auto* co = app.add_subcommand("corpus", "Random corpus run with oracle cross-checks");
  co->add_option("--count", corpus.count);
  co->add_option("--min-n", corpus.min_n);
  co->add_option("--max-n", corpus.max_n);
  co->add_option("--seed", corpus.seed);
  co->add_option("--oracle-max-n", corpus.oracle_max_n);
  co->add_option("--threads", corpus.threads);
  co->add_flag("--no-oracle", no_oracle);
  co->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*bp) return cmd_bipower(graph, k, out);
    if (*mt) return cmd_match(graph, out);
    if (*tr) return cmd_tree(graph, out);
    if (*la) return cmd_lace(graph, from, to, dot);
    if (*ve) return cmd_verify(graph, path_text);
    if (*ap) return cmd_approx(generator, seed_pair, approx_radius, dot, as_json);
    if (*zo) return cmd_zoo(family, k, s, radius, out, check);
    if (*orc) return cmd_oracle(graph, mode, power, from, to);
    if (*co) {
      corpus.oracle = !no_oracle;
      return cmd_corpus(corpus, out);
    }
  } catch (const RadiusError& e) {
    std::cerr << "error [radius]: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
