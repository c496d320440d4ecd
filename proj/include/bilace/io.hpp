#ifndef BILACE_IO_HPP
#define BILACE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilace/graph.hpp"
#include "bilace/matching.hpp"

namespace bilace {

/// Graph plus the optional annotations of the JSON exchange format:
/// {"n", "edges", "labels"?, "bipartition"?, "matching"?, "tree_parent"?}.
struct GraphDocument {
  Graph graph;
  std::optional<Bipartition> bipartition;
  std::optional<Matching> matching;
  std::optional<std::vector<std::optional<Vertex>>> tree_parent;
};

/// Throws PreconditionError on malformed input.
GraphDocument parse_graph_json(std::string_view text);
std::string write_graph_json(const GraphDocument& doc);

/// One "u v" pair per line; '#' starts a comment, except that a "# n N"
/// header fixes the vertex count.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Reads JSON for *.json, edge-list text otherwise.
GraphDocument read_graph_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct DotStyle {
  std::string name = "G";
  const Matching* matching = nullptr;   // drawn bold
  const std::vector<Vertex>* path = nullptr;  // consecutive pairs drawn coloured
  /// Pairs of the path that are not edges of the graph are added dashed.
  bool show_path_chords = true;
};

std::string to_dot(const Graph& g, const DotStyle& style = {});

/// Resolves a vertex given by label or decimal index.
Vertex resolve_vertex(const Graph& g, std::string_view name);

}  // namespace bilace

#endif  // BILACE_IO_HPP
