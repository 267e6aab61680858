#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcspace/canonical_graph.hpp"

namespace tcspace {

/// Directed weighted graph with two distinguished vertices. Directions only
/// matter for composition; metric spaces built from it ignore them.
struct TwoPortGraph {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational weight;
    std::string label;

    friend bool operator==(const Arc&, const Arc&) = default;
  };

  std::vector<std::string> vertices;
  std::vector<Arc> edges;
  std::size_t bottom = 0;
  std::size_t top = 1;

  friend bool operator==(const TwoPortGraph&, const TwoPortGraph&) = default;
};

/// Undirected copy with the same vertex order.
WeightedGraph to_weighted_graph(const TwoPortGraph& g);

/// Throws NotNormalized unless the graph is connected and d(top, bottom) = 1.
void check_normalized(const TwoPortGraph& g);

/// B_0: vertices "bottom", "top" joined by one edge "e" of length 1.
TwoPortGraph unit_edge();
/// bottom -> a -> top and bottom -> b -> top, every edge 1/2.
TwoPortGraph quadrilateral_two_port();
/// K_{2,3} with bottom and top as the two degree-3 vertices, every edge 1/2.
TwoPortGraph k23_two_port();

/// H ⊘ G: each arc u -> v of H labelled L becomes a copy of G scaled by w(e),
/// with u as G's bottom and v as G's top. Inner vertices and arcs of the copy
/// are named L + "." + (name in G). Vertices of H come first, then the new
/// vertices arc by arc. Checks that V(H) embeds isometrically.
TwoPortGraph compose(const TwoPortGraph& h, const TwoPortGraph& g);

/// Name, parameters and per-vertex generation of a generated space.
/// Recursive families also carry their base graph so that every level can be
/// regenerated.
struct FamilyDescriptor {
  std::string name;  // diamond | grid | complete_bipartite | cycle | recursive
  std::vector<std::pair<std::string, long>> params;
  std::vector<int> generation;
  bool recursive = false;
  std::optional<TwoPortGraph> base;

  std::optional<long> param(const std::string& key) const;
  /// "D_m" for diamonds, "B_m" otherwise.
  std::string level_name(int level) const;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

struct Family {
  WeightedGraph graph;
  FamilyDescriptor descriptor;
  std::optional<TwoPortGraph> two_port;  // set for recursive families

  MetricSpace space() const { return shortest_path_metric(graph); }
  /// Canonical graph through the sparse shortest-path route.
  CanonicalGraph canonical() const { return canonical_graph(graph); }
};

/// D_n with every edge of length 2^-n, built by direct quadrilateral
/// substitution.
Family diamond(int n);
/// n x n unit grid, vertices "v{row}_{col}" from 1.
Family grid(int n);
/// K_{m,n}, parts "a1".."am" and "b1".."bn".
Family complete_bipartite(int m, int n);
/// C_n with unit edges, vertices "c1".."cn".
Family cycle(int n);
/// B_n = B_{n-1} ⊘ B with B_0 the unit edge.
Family recursive_family(const TwoPortGraph& base, int n);

/// Level `level` of a recursive family described by `descriptor`. Throws
/// PeelNotApplicable for families that are not recursive compositions.
Family family_level(const FamilyDescriptor& descriptor, int level);
/// Levels 0..n in one composition pass.
std::vector<Family> family_levels(const FamilyDescriptor& descriptor, int n);

}  // namespace tcspace
