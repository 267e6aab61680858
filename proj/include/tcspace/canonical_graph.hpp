#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcspace/metric.hpp"

namespace tcspace {

/// Edge of a canonical graph. The (tail, head) order is the reference
/// orientation; tail is always the smaller point index.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational weight;
};

/// The weighted graph on X that keeps exactly the pairs uv with no third
/// point w satisfying d(u,w) + d(w,v) = d(u,v). Its weighted path metric
/// equals the metric of X. Edges are sorted by (tail, head).
class CanonicalGraph {
 public:
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  CanonicalGraph(MetricSpace space, std::vector<Edge> edges);

  const MetricSpace& space() const { return space_; }
  std::size_t num_vertices() const { return space_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  /// Incident edges of v, sorted by neighbor index.
  const std::vector<Incidence>& incident(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  /// Edge weights as a vector indexed by edge.
  EdgeVector weights() const;

  /// Next vertex after `from` on the lexicographically first shortest path to `to`.
  std::size_t next_hop(std::size_t from, std::size_t to) const;
  /// Vertex sequence of the lexicographically first shortest path.
  std::vector<std::size_t> shortest_path(std::size_t from, std::size_t to) const;

 private:
  MetricSpace space_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Deletes every pair realized through a third point. O(n^3); checks that the
/// path metric of the result reproduces the input metric.
CanonicalGraph canonical_graph(const MetricSpace& space);

/// Same graph for the shortest-path metric of `graph`, computed in O(n m)
/// after all-pairs Dijkstra. Canonical edges are always input edges, so only
/// those are tested.
CanonicalGraph canonical_graph(const WeightedGraph& graph, std::size_t base = 0);

/// Weighted path metric of the graph (Floyd-Warshall).
Matrix path_metric(const CanonicalGraph& graph);

bool is_connected(const CanonicalGraph& graph);

/// ‖p‖_{1,d} = Σ_e |p(e)| w(e).
Rational l1d_norm(const CanonicalGraph& graph, const EdgeVector& p);

/// pr_p(v) = Σ_{tail(e)=v} p(e) - Σ_{head(e)=v} p(e); equals -D p.
VertexVector apply_incidence(const CanonicalGraph& graph, const EdgeVector& p);

/// Incidence matrix D: rows are vertices, columns edges; +1 at the head,
/// -1 at the tail.
Matrix incidence_matrix(const CanonicalGraph& graph);

/// Graphviz rendering with weights as labels and arrowheads along the
/// reference orientation.
std::string to_dot(const CanonicalGraph& graph);

}  // namespace tcspace
