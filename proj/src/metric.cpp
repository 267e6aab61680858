#include "tcspace/metric.hpp"

#include <functional>
#include <queue>
#include <set>

namespace tcspace {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

namespace detail {
MetricSpace trusted_metric(std::vector<std::string> points, Matrix dist, std::size_t base) {
  return MetricSpace(std::move(points), std::move(dist), base);
}
}  // namespace detail

std::optional<std::size_t> MetricSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

MetricSpace MetricSpace::with_base(std::size_t base) const {
  if (base >= size()) throw Error(ErrorCode::InvalidInput, "base point index out of range");
  return MetricSpace(points_, dist_, base);
}

MetricSpace MetricSpace::subspace(std::span<const std::size_t> indices) const {
  if (indices.empty()) throw Error(ErrorCode::InvalidInput, "empty subspace");
  std::vector<std::string> names;
  Matrix d(ix(indices.size()), ix(indices.size()));
  std::size_t new_base = 0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= size()) throw Error(ErrorCode::InvalidInput, "subspace index out of range");
    names.push_back(points_[indices[a]]);
    if (indices[a] == base_) new_base = a;
    for (std::size_t b = 0; b < indices.size(); ++b) d(ix(a), ix(b)) = dist(indices[a], indices[b]);
  }
  return MetricSpace(std::move(names), std::move(d), new_base);
}

std::optional<MetricViolation> check_metric(const Matrix& dist) {
  if (dist.rows() != dist.cols())
    return MetricViolation{ErrorCode::NonSquare, {}, "distance matrix is not square"};
  const std::size_t n = static_cast<std::size_t>(dist.rows());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dist(ix(i), ix(j)) < 0)
        return MetricViolation{ErrorCode::NegativeDistance, {i, j},
                               "negative distance between " + idx(i) + " and " + idx(j)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(ix(i), ix(j)) != dist(ix(j), ix(i)))
        return MetricViolation{ErrorCode::NonSymmetric, {i, j},
                               "dist(" + idx(i) + "," + idx(j) + ") != dist(" + idx(j) + "," + idx(i) + ")"};
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(ix(i), ix(i)) != 0)
      return MetricViolation{ErrorCode::ZeroDistanceDistinctPoints, {i, i},
                             "nonzero self-distance at " + idx(i)};
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(ix(i), ix(j)) == 0)
        return MetricViolation{ErrorCode::ZeroDistanceDistinctPoints, {i, j},
                               "distinct points " + idx(i) + " and " + idx(j) + " at distance 0"};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (dist(ix(i), ix(k)) > dist(ix(i), ix(j)) + dist(ix(j), ix(k)))
          return MetricViolation{ErrorCode::TriangleViolation, {i, j, k},
                                 "dist(" + idx(i) + "," + idx(k) + ") exceeds the path through " + idx(j)};
      }
  return std::nullopt;
}

MetricSpace validate_metric(std::vector<std::string> points, Matrix dist, std::size_t base) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidInput, "a metric space needs at least 2 points");
  if (dist.rows() != dist.cols() || static_cast<std::size_t>(dist.rows()) != points.size())
    throw Error(ErrorCode::NonSquare, "distance matrix must be square and match the point count");
  if (std::set<std::string>(points.begin(), points.end()).size() != points.size())
    throw Error(ErrorCode::InvalidInput, "point names must be distinct");
  if (base >= points.size()) throw Error(ErrorCode::InvalidInput, "base point index out of range");
  if (auto violation = check_metric(dist)) throw Error(violation->kind, violation->message, violation->indices);
  return MetricSpace(std::move(points), std::move(dist), base);
}

namespace {

using Adjacency = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

Adjacency adjacency_of(const WeightedGraph& graph) {
  const std::size_t n = graph.vertices.size();
  Adjacency adjacency(n);
  for (const auto& e : graph.edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::InvalidInput, "self-loop at " + graph.vertices[e.u]);
    if (e.w <= 0) throw Error(ErrorCode::InvalidInput, "edge weights must be positive");
    adjacency[e.u].emplace_back(e.v, e.w);
    adjacency[e.v].emplace_back(e.u, e.w);
  }
  return adjacency;
}

std::vector<Rational> dijkstra(const Adjacency& adjacency, std::size_t source) {
  const std::size_t n = adjacency.size();
  using Item = std::pair<Rational, std::size_t>;
  std::vector<std::optional<Rational>> best(n);
  std::vector<bool> done(n, false);
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  best[source] = Rational(0);
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& [v, w] : adjacency[u]) {
      Rational candidate = d + w;
      if (!best[v] || candidate < *best[v]) {
        best[v] = candidate;
        queue.emplace(std::move(candidate), v);
      }
    }
  }
  std::vector<Rational> dist(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!best[v]) throw Error(ErrorCode::InvalidInput, "graph is disconnected");
    dist[v] = std::move(*best[v]);
  }
  return dist;
}

}  // namespace

std::vector<Rational> single_source_distances(const WeightedGraph& graph, std::size_t source) {
  if (source >= graph.vertices.size()) throw Error(ErrorCode::InvalidInput, "source out of range");
  return dijkstra(adjacency_of(graph), source);
}

Matrix all_pairs_distances(const WeightedGraph& graph) {
  const std::size_t n = graph.vertices.size();
  const Adjacency adjacency = adjacency_of(graph);
  Matrix dist(ix(n), ix(n));
  for (std::size_t source = 0; source < n; ++source) {
    std::vector<Rational> row = dijkstra(adjacency, source);
    for (std::size_t v = 0; v < n; ++v) dist(ix(source), ix(v)) = std::move(row[v]);
  }
  return dist;
}

MetricSpace shortest_path_metric(const WeightedGraph& graph, std::size_t base) {
  if (graph.vertices.size() < 2) throw Error(ErrorCode::InvalidInput, "a metric space needs at least 2 points");
  if (std::set<std::string>(graph.vertices.begin(), graph.vertices.end()).size() != graph.vertices.size())
    throw Error(ErrorCode::InvalidInput, "vertex names must be distinct");
  if (base >= graph.vertices.size()) throw Error(ErrorCode::InvalidInput, "base point index out of range");
  return detail::trusted_metric(graph.vertices, all_pairs_distances(graph), base);
}

}  // namespace tcspace
