#include "bilace/zoo.hpp"

#include <algorithm>
#include <set>

#include "bilace/matching.hpp"

namespace bilace {

bool ZooReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.holds || c.skipped; });
}

const CertificateCheck* ZooReport::find(const std::string& kind) const {
  for (const auto& c : checks)
    if (c.kind == kind) return &c;
  return nullptr;
}

namespace {

void add_check(ZooReport& r, std::string kind, bool holds, std::string detail) {
  r.checks.push_back({std::move(kind), holds, false, std::move(detail)});
}

void add_skip(ZooReport& r, std::string kind, std::string detail) {
  r.checks.push_back({std::move(kind), false, true, std::move(detail)});
}

bool independent(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : set) in[v] = true;
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

std::vector<Vertex> sorted_neighbors(const Graph& g, Vertex v) {
  auto n = g.neighbors(v);
  return {n.begin(), n.end()};
}

bool perfect_matching_exists(const Graph& g) {
  return maximum_matching(g, check_bipartition(g)).is_perfect();
}

ZooReport verify_L(const ZooInstance& z, const ZooOptions& options) {
  ZooReport r;
  const Graph& g = *z.graph;
  const std::size_t n = g.order();
  std::vector<Vertex> outer = z.layers.front();
  outer.insert(outer.end(), z.layers.back().begin(), z.layers.back().end());
  r.metrics["order"] = static_cast<std::int64_t>(n);
  r.metrics["independent_size"] = static_cast<std::int64_t>(outer.size());

  bool indep = independent(g, outer);
  add_check(r, "independent_majority", indep && 2 * outer.size() > n,
            "V_0 u V_{s+1} has " + std::to_string(outer.size()) + " vertices of " +
                std::to_string(n) + (indep ? ", independent" : ", not independent"));

  Matching m = maximum_matching(g, check_bipartition(g));
  bool refused = false;
  try {
    require_perfect(m, g);
  } catch (const NoPerfectMatching&) {
    refused = true;
  }
  r.metrics["maximum_matching"] = static_cast<std::int64_t>(m.size());
  add_check(r, "no_perfect_matching", refused,
            "maximum matching has " + std::to_string(m.size()) + " edges");

  for (std::size_t l = 1; l <= z.s; ++l) {
    std::string kind = "no_hamilton_cycle_l" + std::to_string(l);
    if (n > options.budget.max_vertices) {
      add_skip(r, kind, "order exceeds exhaustive-search limit");
      continue;
    }
    auto result = hamilton_cycle_exists(bi_power(g, l), options.budget);
    if (result.verdict == Verdict::kBudgetExceeded)
      add_skip(r, kind, "search budget exceeded");
    else
      add_check(r, kind, result.verdict == Verdict::kNo,
                std::string("exhaustive search: ") + to_string(result.verdict));
  }
  return r;
}

ZooReport verify_layered(const ZooInstance& z) {
  ZooReport r;
  const LazyGraph& lg = *z.lazy;
  const std::size_t l = z.s;
  Ball b = ball(lg, lg.origin, l + 1);
  Graph power = bi_power(b.graph, l);
  std::vector<Vertex> base;
  for (Vertex v = 0; v < b.ids.size(); ++v)
    if (b.ids[v].i == 0) base.push_back(v);
  std::set<Vertex> hood;
  std::set<Vertex> hood_g;
  for (Vertex v : base) {
    for (Vertex w : power.neighbors(v)) hood.insert(w);
    for (Vertex w : b.graph.neighbors(v)) hood_g.insert(w);
  }
  r.metrics["base_size"] = static_cast<std::int64_t>(base.size());
  r.metrics["neighbourhood_size"] = static_cast<std::int64_t>(hood.size());
  add_check(r, "hall_deficit", independent(b.graph, base) && hood_g.size() < base.size(),
            "|N(V_0)| = " + std::to_string(hood_g.size()) + " < |V_0| = " +
                std::to_string(base.size()));
  const std::size_t expected = ((l + 1) / 2) * z.k;
  add_check(r, "power_neighbourhood_deficit",
            independent(power, base) && hood.size() == expected && hood.size() < base.size(),
            "in the " + std::to_string(l) + "-th bi-power |N(V_0)| = " +
                std::to_string(hood.size()) + " < |V_0| = " + std::to_string(base.size()));
  return r;
}

// Leaves of g, each with its unique neighbour and its centre.
struct Spoke {
  Vertex leaf;
  Vertex near;
  Vertex centre;
};

void check_spokes(ZooReport& r, const Graph& cube, const std::vector<Spoke>& spokes,
                  const std::vector<Vertex>& centres, std::size_t k,
                  const std::vector<std::string>& names) {
  bool exact = true;
  std::string bad;
  for (const Spoke& s : spokes) {
    std::vector<Vertex> want{s.near, s.centre};
    std::sort(want.begin(), want.end());
    if (sorted_neighbors(cube, s.leaf) != want) {
      exact = false;
      bad = names[s.leaf];
    }
  }
  add_check(r, "leaf_neighbourhoods", exact,
            exact ? "every leaf has bi-cube neighbourhood {subdivision vertex, centre}"
                  : "leaf " + bad + " has a different bi-cube neighbourhood");
  for (Vertex c : centres) {
    std::size_t forced = 0;
    for (const Spoke& s : spokes)
      if (s.centre == c && cube.degree(s.leaf) == 2 && cube.adjacent(s.leaf, c)) ++forced;
    r.metrics["forced_at_" + names[c]] = static_cast<std::int64_t>(forced);
    add_check(r, "degree_forcing_" + names[c], forced >= 3 && forced >= k,
              std::to_string(forced) + " degree-2 leaves force edges at " + names[c]);
  }
}

ZooReport verify_L_subdivided(const ZooInstance& z, const ZooOptions& options) {
  ZooReport r;
  const Graph& g = *z.graph;
  Graph cube = bi_power(g, 3);
  std::vector<Spoke> spokes;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) {
      Vertex s2 = g.neighbors(v)[0];
      Vertex s1 = g.neighbors(s2)[0] == v ? g.neighbors(s2)[1] : g.neighbors(s2)[0];
      Vertex c = g.neighbors(s1)[0] == s2 ? g.neighbors(s1)[1] : g.neighbors(s1)[0];
      spokes.push_back({v, s2, c});
    }
  r.metrics["order"] = static_cast<std::int64_t>(g.order());
  check_spokes(r, cube, spokes, {0, 1}, z.k, g.labels());
  add_check(r, "cube_perfect_matching", perfect_matching_exists(cube),
            "maximum matching of the bi-cube");
  if (g.order() > options.budget.max_vertices)
    add_skip(r, "no_hamilton_cycle_l3", "order exceeds exhaustive-search limit");
  else
    add_check(r, "no_hamilton_cycle_l3",
              hamilton_cycle_exists(cube, options.budget).verdict == Verdict::kNo,
              "exhaustive search");
  return r;
}

ZooReport verify_star_ray(const ZooInstance& z, const ZooOptions& options) {
  ZooReport r;
  const LazyGraph& lg = *z.lazy;
  std::size_t radius = options.radius ? options.radius : 9;
  if (radius < 7) throw RadiusError("star-ray verification needs radius >= 7");
  Ball b = ball(lg, lg.origin, radius);
  Graph cube = bi_power(b.graph, 3);
  std::vector<std::string> names;
  for (const NodeId& id : b.ids) names.push_back(lg.name_of(id));
  Vertex c = *b.find(lg.origin);
  std::vector<Spoke> spokes;
  for (Vertex v = 0; v < b.ids.size(); ++v)
    if (b.ids[v].kind == 1 && b.ids[v].j == 3)
      spokes.push_back({v, *b.find(NodeId{1, b.ids[v].i, 2}), c});
  r.metrics["leaves"] = static_cast<std::int64_t>(spokes.size());
  check_spokes(r, cube, spokes, {c}, z.k, names);

  // Truncations at odd radius are balanced; the full bi-cube is only
  // sampled, not certified.
  std::size_t odd = radius % 2 == 1 ? radius : radius + 1;
  Ball t = odd == radius ? b : ball(lg, lg.origin, odd);
  Graph tcube = bi_power(t.graph, 3);
  Matching m = maximum_matching(tcube, check_bipartition(tcube));
  r.metrics["truncation_order"] = static_cast<std::int64_t>(tcube.order());
  r.metrics["truncation_matching"] = static_cast<std::int64_t>(m.size());
  add_check(r, "truncation_perfect_matching", m.is_perfect(),
            "bi-cube of the radius-" + std::to_string(odd) + " truncation: matching of " +
                std::to_string(m.size()) + " edges on " + std::to_string(tcube.order()) +
                " vertices");
  return r;
}

ZooReport verify_ray(std::size_t steps) {
  ZooReport r;
  RayForcing f = ray_forcing(steps);
  const std::vector<std::int64_t> expected{2, 1, 4, 3, 6};
  std::vector<std::int64_t> head(f.prefix.begin(),
                                 f.prefix.begin() + std::min<std::size_t>(5, f.prefix.size()));
  std::string text;
  for (auto i : f.prefix) text += (text.empty() ? "r" : " r") + std::to_string(i);
  add_check(r, "forced_prefix", head == expected, text);
  bool alternating = true;
  for (std::size_t p = 0; p < f.prefix.size(); ++p) {
    auto want = p % 2 == 0 ? static_cast<std::int64_t>(p) + 2 : static_cast<std::int64_t>(p);
    if (f.prefix[p] != want) alternating = false;
  }
  add_check(r, "pair_alternation", alternating, "prefix runs r_{2j} r_{2j-1} pairwise");
  r.metrics["blocked_endpoints"] = static_cast<std::int64_t>(f.blocked_endpoints.size());
  add_check(r, "blocked_endpoints", !f.blocked_endpoints.empty() || steps < 4,
            std::to_string(f.blocked_endpoints.size()) +
                " even endpoints are passed through by the forced prefix");
  return r;
}

ZooReport verify_figure1(const ZooInstance& z, const ZooOptions& options) {
  ZooReport r;
  const LazyGraph& lg = *z.lazy;
  const std::size_t radius = options.radius ? options.radius : 8;
  Ball b = ball(lg, lg.origin, radius);
  bool covers = true;
  bool odd_ok = true;
  std::size_t interior = 0;
  for (Vertex v = 0; v < b.ids.size(); ++v) {
    if (b.depth[v] >= radius) continue;
    ++interior;
    const NodeId& id = b.ids[v];
    auto p = lg.partner(id);
    auto pv = p ? b.find(*p) : std::nullopt;
    if (!pv || !b.graph.adjacent(v, *pv) || lg.partner(*p) != id) covers = false;
    if (id.j % 2 == 1 && (b.graph.degree(v) != 2 || !p || p->j != id.j - 1)) odd_ok = false;
  }
  r.metrics["interior"] = static_cast<std::int64_t>(interior);
  add_check(r, "matching_covers_interior", covers,
            std::to_string(interior) + " interior vertices of the radius-" +
                std::to_string(radius) + " truncation");
  auto adj = [&](NodeId a, NodeId c) {
    auto n = lg.checked_neighbors(a);
    return std::find(n.begin(), n.end(), c) != n.end();
  };
  add_check(r, "rung_2_present", adj({0, 1, 2}, {0, 2, 2}), "v1_2 v2_2");
  add_check(r, "rung_3_absent", !adj({0, 1, 3}, {0, 2, 3}), "v1_3 v2_3");
  add_check(r, "degree_v1_1", lg.checked_neighbors({0, 1, 1}).size() == 2, "deg(v1_1) = 2");
  add_check(r, "odd_vertices", odd_ok, "odd-index vertices have degree 2 and partner j-1");
  return r;
}

std::string with_params(const std::string& base, std::initializer_list<std::size_t> ps) {
  std::string out = base;
  for (auto p : ps) out += ":" + std::to_string(p);
  return out;
}

}  // namespace

ZooInstance build_L(std::size_t k, std::size_t s, std::size_t overshoot) {
  if (k == 0) throw PreconditionError("L_{k,s} needs k >= 1");
  if (s < 2 || s % 2 != 0) throw PreconditionError("L_{k,s} needs an even s >= 2");
  if (overshoot == 0) throw PreconditionError("L_{k,s} needs overshoot >= 1");
  ZooInstance z;
  z.family = Family::kL;
  z.name = with_params("L", {k, s});
  z.k = k;
  z.s = s;
  const std::size_t outer = s * k / 2 + overshoot;
  std::vector<std::string> labels;
  Vertex next = 0;
  for (std::size_t i = 0; i <= s + 1; ++i) {
    std::size_t size = (i == 0 || i == s + 1) ? outer : k;
    z.layers.emplace_back();
    for (std::size_t j = 0; j < size; ++j) {
      z.layers.back().push_back(next++);
      labels.push_back("V" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < z.layers.size(); ++i)
    for (Vertex a : z.layers[i])
      for (Vertex b : z.layers[i + 1]) edges.emplace_back(a, b);
  z.graph = Graph(next, edges);
  z.graph->set_labels(std::move(labels));
  z.expected_certificates = {"independent_majority", "no_perfect_matching", "no_hamilton_cycle"};
  return z;
}

ZooInstance build_H_layered(std::size_t k, std::size_t l, std::size_t overshoot) {
  ZooInstance z;
  z.family = Family::kLayered;
  z.name = with_params("H_layered", {k, l});
  z.k = k;
  z.s = l;
  z.lazy = layered_generator(k, l, overshoot);
  z.expected_certificates = {"hall_deficit", "power_neighbourhood_deficit"};
  return z;
}

ZooInstance build_L_subdivided(std::size_t k) {
  if (k < 3) throw PreconditionError("L_k needs k >= 3");
  ZooInstance z;
  z.family = Family::kLSubdivided;
  z.name = with_params("L_sub", {k});
  z.k = k;
  std::vector<std::string> labels{"c1", "c2"};
  std::vector<Edge> edges{{0, 1}};
  for (Vertex c = 0; c < 2; ++c)
    for (std::size_t t = 1; t <= k; ++t) {
      auto base = static_cast<Vertex>(labels.size());
      std::string tag = std::to_string(c + 1) + "_" + std::to_string(t);
      labels.push_back("s" + tag + "_1");
      labels.push_back("s" + tag + "_2");
      labels.push_back("l" + tag);
      edges.emplace_back(c, base);
      edges.emplace_back(base, base + 1);
      edges.emplace_back(base + 1, base + 2);
    }
  z.graph = Graph(labels.size(), edges);
  z.graph->set_labels(std::move(labels));
  z.expected_certificates = {"leaf_neighbourhoods", "degree_forcing", "cube_perfect_matching"};
  return z;
}

ZooInstance build_H_star_ray(std::size_t k) {
  ZooInstance z;
  z.family = Family::kStarRay;
  z.name = with_params("H_star", {k});
  z.k = k;
  z.lazy = star_ray_generator(k);
  z.expected_certificates = {"leaf_neighbourhoods", "degree_forcing"};
  return z;
}

ZooInstance build_ray() {
  ZooInstance z;
  z.family = Family::kRay;
  z.name = "ray";
  z.lazy = ray_generator();
  z.expected_certificates = {"forced_prefix"};
  return z;
}

ZooInstance build_figure1() {
  ZooInstance z;
  z.family = Family::kFigure1;
  z.name = "figure1";
  z.lazy = figure1_generator();
  z.expected_certificates = {"matching_covers_interior"};
  return z;
}

std::vector<std::string> family_names() {
  return {"L", "H_layered", "L_sub", "H_star", "ray", "figure1"};
}

ZooInstance build_family(const std::string& family, std::size_t k, std::size_t s) {
  if (family == "L") return build_L(k, s);
  if (family == "H_layered") return build_H_layered(k, s);
  if (family == "L_sub") return build_L_subdivided(k);
  if (family == "H_star") return build_H_star_ray(k);
  if (family == "ray") return build_ray();
  if (family == "figure1") return build_figure1();
  throw PreconditionError("unknown zoo family '" + family + "'");
}

ZooReport verify(const ZooInstance& z, const ZooOptions& options) {
  ZooReport r;
  switch (z.family) {
    case Family::kL: r = verify_L(z, options); break;
    case Family::kLayered: r = verify_layered(z); break;
    case Family::kLSubdivided: r = verify_L_subdivided(z, options); break;
    case Family::kStarRay: r = verify_star_ray(z, options); break;
    case Family::kRay: r = verify_ray(options.radius ? options.radius : 9); break;
    case Family::kFigure1: r = verify_figure1(z, options); break;
  }
  r.instance = z.name;
  return r;
}

RayForcing ray_forcing(std::size_t n) {
  if (n == 0) throw PreconditionError("ray forcing needs n >= 1");
  const LazyGraph lg = ray_generator();
  const std::size_t radius = n + 8;
  Ball b = ball(lg, lg.origin, radius);
  Graph cube = bi_power(b.graph, 3);
  // Vertices this close to the truncation boundary have incomplete neighbourhoods.
  auto exact = [&](Vertex v) { return b.depth[v] + 3 < radius; };

  RayForcing out;
  std::vector<bool> removed(cube.order(), false);
  std::vector<bool> visited(cube.order(), false);
  Vertex end = *b.find(NodeId{0, 2, 0});
  visited[end] = true;
  std::vector<Vertex> path{end};
  while (path.size() < n) {
    std::vector<Vertex> forced;
    for (Vertex w : cube.neighbors(end)) {
      if (visited[w] || !exact(w)) continue;
      std::size_t live = 0;
      for (Vertex x : cube.neighbors(w)) live += removed[x] ? 0 : 1;
      if (live == 2) forced.push_back(w);
    }
    // Two forced neighbours would need degree 3 at the end vertex.
    if (forced.size() != 1) break;
    Vertex w = forced.front();
    Vertex next = w;
    for (Vertex x : cube.neighbors(w))
      if (x != end && !removed[x]) next = x;
    if (next == w || visited[next] || !exact(next)) break;
    removed[end] = true;
    visited[w] = visited[next] = true;
    removed[w] = true;
    path.push_back(w);
    path.push_back(next);
    end = next;
  }
  path.resize(std::min(path.size(), n));
  for (std::size_t p = 0; p < path.size(); ++p) {
    auto index = b.ids[path[p]].i;
    out.prefix.push_back(index);
    if (p + 1 < path.size() && index % 2 == 0 && index > 2) out.blocked_endpoints.push_back(index);
  }
  return out;
}

}  // namespace bilace
