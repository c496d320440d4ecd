#include "bilace/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bilace {

using nlohmann::json;

namespace {

Vertex as_vertex(const json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw PreconditionError(std::string(what) + ": vertex must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

std::vector<Edge> as_edges(const json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw PreconditionError(std::string(what) + " must be an array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw PreconditionError(std::string(what) + ": every entry must be a pair");
    out.emplace_back(as_vertex(e[0], n, what), as_vertex(e[1], n, what));
  }
  return out;
}

}  // namespace

GraphDocument parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
    throw PreconditionError("graph JSON needs a nonnegative integer \"n\"");
  const auto n = j["n"].get<std::size_t>();
  GraphDocument doc;
  doc.graph = Graph(n, j.contains("edges") ? as_edges(j["edges"], n, "edges") : std::vector<Edge>{});
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw PreconditionError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    doc.graph.set_labels(std::move(labels));
  }
  if (j.contains("bipartition")) {
    const auto& b = j["bipartition"];
    if (!b.is_array() || b.size() != n) throw PreconditionError("bipartition needs one flag per vertex");
    Bipartition bip;
    for (const auto& f : b) {
      if (f == "A" || f == 0) bip.side.push_back(Side::A);
      else if (f == "B" || f == 1) bip.side.push_back(Side::B);
      else throw PreconditionError("bipartition flags must be \"A\"/\"B\" or 0/1");
    }
    if (!bip.valid_for(doc.graph)) throw PreconditionError("bipartition is not valid for the graph");
    doc.bipartition = std::move(bip);
  }
  if (j.contains("matching")) {
    auto pairs = as_edges(j["matching"], n, "matching");
    doc.matching = Matching::from_pairs(doc.graph, pairs);
  }
  if (j.contains("tree_parent")) {
    const auto& t = j["tree_parent"];
    if (!t.is_array() || t.size() != n) throw PreconditionError("tree_parent needs one entry per vertex");
    std::vector<std::optional<Vertex>> parents;
    for (const auto& p : t)
      parents.push_back(p.is_null() ? std::nullopt
                                    : std::optional<Vertex>(as_vertex(p, n, "tree_parent")));
    doc.tree_parent = std::move(parents);
  }
  return doc;
}

std::string write_graph_json(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  if (doc.bipartition) {
    json b = json::array();
    for (Side s : doc.bipartition->side) b.push_back(s == Side::A ? "A" : "B");
    j["bipartition"] = std::move(b);
  }
  if (doc.matching) {
    json m = json::array();
    for (const Edge& e : doc.matching->pairs()) m.push_back({e.u, e.v});
    j["matching"] = std::move(m);
  }
  if (doc.tree_parent) {
    json t = json::array();
    for (const auto& p : *doc.tree_parent) t.push_back(p ? json(*p) : json(nullptr));
    j["tree_parent"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<std::pair<long long, long long>> raw;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      std::size_t n = 0;
      if (ls >> key >> n && key == "n") declared = n;
      continue;
    }
    long long u = 0, v = 0;
    std::istringstream pair(line);
    std::string rest;
    if (!(pair >> u >> v) || (pair >> rest && rest[0] != '#') || u < 0 || v < 0)
      throw PreconditionError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    raw.emplace_back(u, v);
  }
  std::size_t n = declared.value_or(0);
  for (auto [u, v] : raw) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  if (declared && n > *declared) throw PreconditionError("edge list vertex exceeds declared n");
  std::vector<Edge> edges;
  for (auto [u, v] : raw) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

GraphDocument read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".json") return parse_graph_json(buffer.str());
  GraphDocument doc;
  doc.graph = parse_edge_list(buffer.str());
  return doc;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << text;
}

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::set<Edge> on_path;
  if (style.path)
    for (std::size_t i = 0; i + 1 < style.path->size(); ++i)
      on_path.emplace((*style.path)[i], (*style.path)[i + 1]);
  auto quote = [&](Vertex v) {
    std::string name = g.label(v), out = "\"";
    for (char c : name) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph \"" << style.name << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << quote(v) << ";\n";
  for (const Edge& e : g.edges()) {
    std::vector<std::string> attrs;
    if (style.matching && style.matching->order() == g.order() && style.matching->contains(e))
      attrs.push_back("style=bold");
    if (on_path.erase(e)) attrs.push_back("color=red");
    out << "  " << quote(e.u) << " -- " << quote(e.v);
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  if (style.show_path_chords)
    for (const Edge& e : on_path)
      out << "  " << quote(e.u) << " -- " << quote(e.v) << " [color=red, style=dashed];\n";
  out << "}\n";
  return out.str();
}

Vertex resolve_vertex(const Graph& g, std::string_view name) {
  if (auto v = g.find(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

}  // namespace bilace
