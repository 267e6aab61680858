#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcspace/canonical_graph.hpp"

namespace tcspace {

/// A canonical-graph edge with a chosen direction.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t edge = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A set of directed canonical-graph edges, kept sorted by (edge, from).
/// Used for directed graphs of problems and for downhill graphs.
class DirectedSubgraph {
 public:
  DirectedSubgraph() = default;
  explicit DirectedSubgraph(std::vector<Arc> arcs);

  /// Resolves (from, to) vertex pairs to canonical edges; throws InvalidInput
  /// if a pair is not an edge.
  static DirectedSubgraph from_pairs(const CanonicalGraph& graph,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains_edge(std::size_t edge) const;

  /// No directed cycle (every edge weight is positive, so downhill graphs
  /// always satisfy this).
  bool is_acyclic(std::size_t num_vertices) const;

  friend bool operator==(const DirectedSubgraph&, const DirectedSubgraph&) = default;

 private:
  std::vector<Arc> arcs_;
};

std::string to_dot(const CanonicalGraph& graph, const DirectedSubgraph& arcs);

}  // namespace tcspace
