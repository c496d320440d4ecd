#include <algorithm>
#include <charconv>
#include <string>

#include "bilace/infinite.hpp"

namespace bilace {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

/// Parses "<prefix><int>" into the integer.
std::optional<std::int64_t> after_prefix(std::string_view s, std::string_view prefix) {
  if (!s.starts_with(prefix)) return std::nullopt;
  return parse_int(s.substr(prefix.size()));
}

/// Parses "<prefix><int>_<int>".
std::optional<std::pair<std::int64_t, std::int64_t>> pair_after_prefix(std::string_view s,
                                                                       std::string_view prefix) {
  if (!s.starts_with(prefix)) return std::nullopt;
  s.remove_prefix(prefix.size());
  auto cut = s.rfind('_');
  if (cut == std::string_view::npos) return std::nullopt;
  auto a = parse_int(s.substr(0, cut));
  auto b = parse_int(s.substr(cut + 1));
  if (!a || !b) return std::nullopt;
  return std::pair{*a, *b};
}

NodeId node(std::int64_t i, std::int64_t j = 0, std::int32_t kind = 0) { return {kind, i, j}; }

}  // namespace

LazyGraph ray_generator() {
  LazyGraph g;
  g.name = "ray";
  g.neighbors = [](const NodeId& v) {
    std::vector<NodeId> out;
    if (v.i > 1) out.push_back(node(v.i - 1));
    out.push_back(node(v.i + 1));
    return out;
  };
  g.degree_bound = 2;
  g.tree_parent = [](const NodeId& v) -> std::optional<NodeId> {
    if (v.i == 1) return std::nullopt;
    return node(v.i - 1);
  };
  g.partner = [](const NodeId& v) -> std::optional<NodeId> {
    return node(v.i % 2 == 1 ? v.i + 1 : v.i - 1);
  };
  g.cut_locality = 0;
  g.label = [](const NodeId& v) { return "r" + std::to_string(v.i); };
  g.parse = [](std::string_view s) -> std::optional<NodeId> {
    auto i = after_prefix(s, "r");
    if (!i || *i < 1) return std::nullopt;
    return node(*i);
  };
  g.origin = node(1);
  return g;
}

LazyGraph double_ray_generator() {
  LazyGraph g;
  g.name = "double_ray";
  g.neighbors = [](const NodeId& v) { return std::vector<NodeId>{node(v.i - 1), node(v.i + 1)}; };
  g.degree_bound = 2;
  g.tree_parent = [](const NodeId& v) -> std::optional<NodeId> {
    if (v.i == 0) return std::nullopt;
    return node(v.i > 0 ? v.i - 1 : v.i + 1);
  };
  // pairs {2j, 2j+1}
  g.partner = [](const NodeId& v) -> std::optional<NodeId> {
    bool even = ((v.i % 2) + 2) % 2 == 0;
    return node(even ? v.i + 1 : v.i - 1);
  };
  g.cut_locality = 0;
  g.label = [](const NodeId& v) { return "d" + std::to_string(v.i); };
  g.parse = [](std::string_view s) -> std::optional<NodeId> {
    auto i = after_prefix(s, "d");
    if (!i) return std::nullopt;
    return node(*i);
  };
  g.origin = node(0);
  return g;
}

namespace {

LazyGraph make_ladder(bool half) {
  LazyGraph g;
  g.name = half ? "half_ladder" : "ladder";
  g.neighbors = [half](const NodeId& v) {
    std::vector<NodeId> out;
    if (!half || v.i > 0) out.push_back(node(v.i - 1, v.j));
    out.push_back(node(v.i, 1 - v.j));
    out.push_back(node(v.i + 1, v.j));
    std::sort(out.begin(), out.end());
    return out;
  };
  g.degree_bound = 3;
  // Comb: the bottom row plus every rung, rooted at (0,0).
  g.tree_parent = [](const NodeId& v) -> std::optional<NodeId> {
    if (v.j == 1) return node(v.i, 0);
    if (v.i == 0) return std::nullopt;
    return node(v.i > 0 ? v.i - 1 : v.i + 1, 0);
  };
  g.partner = [](const NodeId& v) -> std::optional<NodeId> { return node(v.i, 1 - v.j); };
  g.cut_locality = 1;
  g.label = [](const NodeId& v) {
    return "l" + std::to_string(v.i) + "_" + std::to_string(v.j);
  };
  g.parse = [half](std::string_view s) -> std::optional<NodeId> {
    auto p = pair_after_prefix(s, "l");
    if (!p || (p->second != 0 && p->second != 1) || (half && p->first < 0)) return std::nullopt;
    return node(p->first, p->second);
  };
  g.origin = node(0, 0);
  return g;
}

}  // namespace

LazyGraph ladder_generator() { return make_ladder(false); }
LazyGraph half_ladder_generator() { return make_ladder(true); }

LazyGraph k2_generator() {
  LazyGraph g;
  g.name = "k2";
  g.neighbors = [](const NodeId& v) { return std::vector<NodeId>{node(1 - v.i)}; };
  g.degree_bound = 1;
  g.tree_parent = [](const NodeId& v) -> std::optional<NodeId> {
    if (v.i == 0) return std::nullopt;
    return node(0);
  };
  g.partner = [](const NodeId& v) -> std::optional<NodeId> { return node(1 - v.i); };
  g.label = [](const NodeId& v) { return "k" + std::to_string(v.i); };
  g.parse = [](std::string_view s) -> std::optional<NodeId> {
    auto i = after_prefix(s, "k");
    if (!i || (*i != 0 && *i != 1)) return std::nullopt;
    return node(*i);
  };
  g.origin = node(0);
  return g;
}

std::size_t layered_base_size(std::size_t k, std::size_t l, std::size_t overshoot) {
  return ((l + 1) / 2) * k + overshoot;
}

LazyGraph layered_generator(std::size_t k, std::size_t l, std::size_t overshoot) {
  if (k == 0 || l == 0) throw PreconditionError("H_{k,l} needs k >= 1 and l >= 1");
  const auto base = static_cast<std::int64_t>(layered_base_size(k, l, overshoot));
  const auto width = static_cast<std::int64_t>(k);
  auto size_of = [base, width](std::int64_t layer) { return layer == 0 ? base : width; };
  LazyGraph g;
  g.name = "H_layered:" + std::to_string(k) + ":" + std::to_string(l);
  g.neighbors = [size_of](const NodeId& v) {
    std::vector<NodeId> out;
    for (std::int64_t layer : {v.i - 1, v.i + 1}) {
      if (layer < 0) continue;
      for (std::int64_t j = 0; j < size_of(layer); ++j) out.push_back(node(layer, j));
    }
    return out;
  };
  g.degree_bound = static_cast<std::size_t>(base + width);
  g.label = [](const NodeId& v) {
    return "V" + std::to_string(v.i) + "_" + std::to_string(v.j);
  };
  g.parse = [size_of](std::string_view s) -> std::optional<NodeId> {
    auto p = pair_after_prefix(s, "V");
    if (!p || p->first < 0 || p->second < 0 || p->second >= size_of(p->first))
      return std::nullopt;
    return node(p->first, p->second);
  };
  g.origin = node(0, 0);
  return g;
}

// Kinds: 0 centre c, 1 subdivided spoke (i = spoke, j = 1,2 subdivisions,
// 3 leaf), 2 ray vertex r_i, 3 pendant q_i at r_1.
LazyGraph star_ray_generator(std::size_t k) {
  if (k < 3) throw PreconditionError("H_k needs k >= 3");
  const auto spokes = static_cast<std::int64_t>(k);
  LazyGraph g;
  g.name = "H_star:" + std::to_string(k);
  g.neighbors = [spokes](const NodeId& v) {
    std::vector<NodeId> out;
    switch (v.kind) {
      case 0:
        for (std::int64_t t = 1; t <= spokes; ++t) out.push_back(node(t, 1, 1));
        out.push_back(node(1, 0, 2));
        break;
      case 1:
        out.push_back(v.j == 1 ? node(0, 0, 0) : node(v.i, v.j - 1, 1));
        if (v.j < 3) out.push_back(node(v.i, v.j + 1, 1));
        break;
      case 2:
        if (v.i == 1) {
          out.push_back(node(0, 0, 0));
          for (std::int64_t t = 1; t <= spokes; ++t) out.push_back(node(t, 0, 3));
        } else {
          out.push_back(node(v.i - 1, 0, 2));
        }
        out.push_back(node(v.i + 1, 0, 2));
        break;
      default:
        out.push_back(node(1, 0, 2));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  g.degree_bound = k + 2;
  g.label = [](const NodeId& v) -> std::string {
    switch (v.kind) {
      case 0: return "c";
      case 1:
        return v.j == 3 ? "leaf" + std::to_string(v.i)
                        : "s" + std::to_string(v.i) + "_" + std::to_string(v.j);
      case 2: return "r" + std::to_string(v.i);
      default: return "q" + std::to_string(v.i);
    }
  };
  g.parse = [spokes](std::string_view s) -> std::optional<NodeId> {
    if (s == "c") return node(0, 0, 0);
    if (auto t = after_prefix(s, "leaf"); t && *t >= 1 && *t <= spokes) return node(*t, 3, 1);
    if (auto p = pair_after_prefix(s, "s");
        p && p->first >= 1 && p->first <= spokes && (p->second == 1 || p->second == 2))
      return node(p->first, p->second, 1);
    if (auto i = after_prefix(s, "r"); i && *i >= 1) return node(*i, 0, 2);
    if (auto i = after_prefix(s, "q"); i && *i >= 1 && *i <= spokes) return node(*i, 0, 3);
    return std::nullopt;
  };
  g.origin = node(0, 0, 0);
  return g;
}

// v^i_j is NodeId{0, i, j}, i in {1, 2}, j >= 0.
LazyGraph figure1_generator() {
  LazyGraph g;
  g.name = "figure1";
  g.neighbors = [](const NodeId& v) {
    std::vector<NodeId> out;
    if (v.j > 0) out.push_back(node(v.i, v.j - 1));
    out.push_back(node(v.i, v.j + 1));
    if (v.j >= 2 && v.j % 2 == 0) out.push_back(node(3 - v.i, v.j));
    std::sort(out.begin(), out.end());
    return out;
  };
  g.degree_bound = 3;
  g.partner = [](const NodeId& v) -> std::optional<NodeId> {
    return node(v.i, v.j % 2 == 0 ? v.j + 1 : v.j - 1);
  };
  // End-faithful tree containing M: all of side 1, every rung, the M-edges of
  // side 2 and the edge v2_1 v2_2.
  g.tree_parent = [](const NodeId& v) -> std::optional<NodeId> {
    if (v.i == 1) {
      if (v.j == 0) return std::nullopt;
      return node(1, v.j - 1);
    }
    if (v.j == 0) return node(2, 1);
    if (v.j == 1) return node(2, 2);
    if (v.j % 2 == 0) return node(1, v.j);
    return node(2, v.j - 1);
  };
  g.cut_locality = 3;
  g.label = [](const NodeId& v) {
    return "v" + std::to_string(v.i) + "_" + std::to_string(v.j);
  };
  g.parse = [](std::string_view s) -> std::optional<NodeId> {
    auto p = pair_after_prefix(s, "v");
    if (!p || (p->first != 1 && p->first != 2) || p->second < 0) return std::nullopt;
    return node(p->first, p->second);
  };
  g.origin = node(1, 0);
  return g;
}

std::vector<std::string> builtin_generator_names() {
  return {"ray", "double_ray", "ladder", "half_ladder", "k2", "figure1", "H_layered:K:L",
          "H_star:K"};
}

LazyGraph builtin_generator(std::string_view name) {
  if (name == "ray") return ray_generator();
  if (name == "double_ray") return double_ray_generator();
  if (name == "ladder") return ladder_generator();
  if (name == "half_ladder") return half_ladder_generator();
  if (name == "k2") return k2_generator();
  if (name == "figure1") return figure1_generator();
  if (name.starts_with("H_layered:")) {
    auto rest = name.substr(std::string_view("H_layered:").size());
    auto cut = rest.find(':');
    if (cut != std::string_view::npos) {
      auto k = parse_int(rest.substr(0, cut));
      auto l = parse_int(rest.substr(cut + 1));
      if (k && l && *k >= 1 && *l >= 1)
        return layered_generator(static_cast<std::size_t>(*k), static_cast<std::size_t>(*l));
    }
  }
  if (name.starts_with("H_star:")) {
    auto k = parse_int(name.substr(std::string_view("H_star:").size()));
    if (k && *k >= 3) return star_ray_generator(static_cast<std::size_t>(*k));
  }
  throw PreconditionError("unknown generator: " + std::string(name));
}

}  // namespace bilace
