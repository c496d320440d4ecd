#ifndef BILACE_ZOO_HPP
#define BILACE_ZOO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bilace/graph.hpp"
#include "bilace/infinite.hpp"
#include "bilace/oracle.hpp"

namespace bilace {

enum class Family { kL, kLayered, kLSubdivided, kStarRay, kRay, kFigure1 };

/// A counterexample family member. Finite families carry `graph`, infinite
/// ones carry `lazy`.
struct ZooInstance {
  Family family = Family::kL;
  std::string name;
  std::size_t k = 0;
  std::size_t s = 0;  // s for L_{k,s}, l for H_{k,l}
  std::optional<Graph> graph;
  std::optional<LazyGraph> lazy;
  std::vector<std::string> expected_certificates;
  /// L_{k,s}: vertex indices of V_0 .. V_{s+1}.
  std::vector<std::vector<Vertex>> layers;
};

struct CertificateCheck {
  std::string kind;
  bool holds = false;
  bool skipped = false;  // too large for exhaustive search
  std::string detail;
};

struct ZooReport {
  std::string instance;
  std::vector<CertificateCheck> checks;
  std::map<std::string, std::int64_t> metrics;

  bool ok() const;
  const CertificateCheck* find(const std::string& kind) const;
};

struct ZooOptions {
  SearchBudget budget{};
  /// Truncation radius for lazy families; 0 picks a family default.
  std::size_t radius = 0;
};

/// Layers V_0..V_{s+1}, |V_0| = |V_{s+1}| = floor(sk/2) + overshoot, |V_i| = k
/// otherwise, complete bipartite between consecutive layers.
ZooInstance build_L(std::size_t k, std::size_t s, std::size_t overshoot = 1);
ZooInstance build_H_layered(std::size_t k, std::size_t l, std::size_t overshoot = 1);
/// Double star with two centres of degree k + 1 and each leaf edge subdivided twice.
ZooInstance build_L_subdivided(std::size_t k);
ZooInstance build_H_star_ray(std::size_t k);
ZooInstance build_ray();
ZooInstance build_figure1();

/// Builds by family id: "L", "H_layered", "L_sub", "H_star", "ray", "figure1".
ZooInstance build_family(const std::string& family, std::size_t k, std::size_t s);
std::vector<std::string> family_names();

ZooReport verify(const ZooInstance& z, const ZooOptions& options = {});

struct RayForcing {
  /// Ray indices of the forced initial segment of a spanning arc from r_2.
  std::vector<std::int64_t> prefix;
  /// Indices 2k > 2 that the prefix passes through before its end, so no
  /// Hamilton arc from r_2 can end there.
  std::vector<std::int64_t> blocked_endpoints;
};

/// Degree-2 forcing in the bi-cube of the ray r_1 r_2 ... starting at r_2,
/// deleting visited vertices. Returns the first n forced vertices.
RayForcing ray_forcing(std::size_t n);

}  // namespace bilace

#endif  // BILACE_ZOO_HPP
