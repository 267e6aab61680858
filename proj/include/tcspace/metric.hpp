#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcspace/error.hpp"
#include "tcspace/rational.hpp"

namespace tcspace {

/// Which metric axiom failed, and where. For TriangleViolation the triple is
/// (i, j, k) with dist(i,k) > dist(i,j) + dist(j,k).
struct MetricViolation {
  ErrorCode kind;
  std::vector<std::size_t> indices;
  std::string message;
};

class MetricSpace;
namespace detail {
// Skips the O(n^3) axiom check; only for matrices that are metrics by
// construction (shortest-path distances, restrictions of metrics).
MetricSpace trusted_metric(std::vector<std::string> points, Matrix dist, std::size_t base);
}  // namespace detail

/// A finite metric space with a base point. Immutable once built; the only
/// ways to obtain one are validate_metric() and shortest_path_metric(),
/// both of which guarantee the metric axioms.
class MetricSpace {
 public:
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const Rational& dist(std::size_t i, std::size_t j) const { return dist_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
  const Matrix& distances() const { return dist_; }

  std::size_t base() const { return base_; }
  MetricSpace with_base(std::size_t base) const;

  /// Restriction of the metric to the listed points (in the given order).
  /// The base point is kept if listed, otherwise the first listed point is used.
  MetricSpace subspace(std::span<const std::size_t> indices) const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.points_ == b.points_ && a.base_ == b.base_ && a.dist_ == b.dist_;
  }

 private:
  friend MetricSpace validate_metric(std::vector<std::string>, Matrix, std::size_t);
  friend MetricSpace detail::trusted_metric(std::vector<std::string>, Matrix, std::size_t);
  MetricSpace(std::vector<std::string> points, Matrix dist, std::size_t base)
      : points_(std::move(points)), dist_(std::move(dist)), base_(base) {}

  std::vector<std::string> points_;
  Matrix dist_;
  std::size_t base_ = 0;
};

/// First violated axiom of `dist`, if any. Checks in this order: shape,
/// negativity, symmetry, zero distance between distinct points, triangle
/// inequality (equality is allowed).
std::optional<MetricViolation> check_metric(const Matrix& dist);

/// Throws Error carrying the violation kind and indices.
MetricSpace validate_metric(std::vector<std::string> points, Matrix dist, std::size_t base = 0);

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational w;
};

/// Undirected weighted graph given by an edge list; used as an alternative
/// way to describe a metric space (its shortest-path metric).
struct WeightedGraph {
  std::vector<std::string> vertices;
  std::vector<WeightedEdge> edges;
};

/// Shortest-path distances from one vertex. Same checks as below.
std::vector<Rational> single_source_distances(const WeightedGraph& graph, std::size_t source);

/// All-pairs shortest-path distances (Dijkstra from every vertex). Throws
/// InvalidInput for non-positive weights, bad indices, or a disconnected graph.
Matrix all_pairs_distances(const WeightedGraph& graph);

/// Metric space of the graph's shortest-path distance.
MetricSpace shortest_path_metric(const WeightedGraph& graph, std::size_t base = 0);

}  // namespace tcspace
