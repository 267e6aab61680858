#include "tcspace/canonical_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tcspace {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

CanonicalGraph::CanonicalGraph(MetricSpace space, std::vector<Edge> edges)
    : space_(std::move(space)), edges_(std::move(edges)), adjacency_(space_.size()) {
  for (auto& e : edges_) {
    if (e.tail >= space_.size() || e.head >= space_.size() || e.tail == e.head)
      throw Error(ErrorCode::InvalidInput, "bad edge endpoints");
    if (e.tail > e.head) std::swap(e.tail, e.head);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.tail, a.head) < std::tie(b.tail, b.head); });
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k > 0 && edges_[k].tail == edges_[k - 1].tail && edges_[k].head == edges_[k - 1].head)
      throw Error(ErrorCode::InvalidInput, "duplicate edge");
    adjacency_[edges_[k].tail].push_back({edges_[k].head, k});
    adjacency_[edges_[k].head].push_back({edges_[k].tail, k});
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
}

std::size_t CanonicalGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::optional<std::size_t> CanonicalGraph::find_edge(std::size_t u, std::size_t v) const {
  if (u >= adjacency_.size()) return std::nullopt;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Incidence& a, std::size_t value) { return a.neighbor < value; });
  if (it == list.end() || it->neighbor != v) return std::nullopt;
  return it->edge;
}

EdgeVector CanonicalGraph::weights() const {
  EdgeVector w(ix(edges_.size()));
  for (std::size_t k = 0; k < edges_.size(); ++k) w(ix(k)) = edges_[k].weight;
  return w;
}

std::size_t CanonicalGraph::next_hop(std::size_t from, std::size_t to) const {
  for (const auto& inc : adjacency_[from])
    if (edges_[inc.edge].weight + space_.dist(inc.neighbor, to) == space_.dist(from, to)) return inc.neighbor;
  throw std::logic_error("canonical graph does not realize the metric");
}

std::vector<std::size_t> CanonicalGraph::shortest_path(std::size_t from, std::size_t to) const {
  std::vector<std::size_t> path{from};
  while (path.back() != to) path.push_back(next_hop(path.back(), to));
  return path;
}

Matrix path_metric(const CanonicalGraph& graph) {
  const std::size_t n = graph.num_vertices();
  Matrix d(ix(n), ix(n));
  std::vector<std::vector<bool>> finite(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    d(ix(i), ix(i)) = 0;
    finite[i][i] = true;
  }
  for (const auto& e : graph.edges()) {
    d(ix(e.tail), ix(e.head)) = e.weight;
    d(ix(e.head), ix(e.tail)) = e.weight;
    finite[e.tail][e.head] = finite[e.head][e.tail] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!finite[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!finite[k][j]) continue;
        Rational through = d(ix(i), ix(k)) + d(ix(k), ix(j));
        if (!finite[i][j] || through < d(ix(i), ix(j))) {
          d(ix(i), ix(j)) = std::move(through);
          finite[i][j] = true;
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!finite[i][j]) throw Error(ErrorCode::InvalidInput, "graph is disconnected");
  return d;
}

bool is_connected(const CanonicalGraph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (const auto& inc : graph.incident(u))
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++count;
        queue.push(inc.neighbor);
      }
  }
  return count == n;
}

CanonicalGraph canonical_graph(const MetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool deletable = false;
      for (std::size_t w = 0; w < n && !deletable; ++w)
        deletable = w != u && w != v && space.dist(u, w) + space.dist(w, v) == space.dist(u, v);
      if (!deletable) edges.push_back({u, v, space.dist(u, v)});
    }
  CanonicalGraph graph(space, std::move(edges));
  if (!is_connected(graph)) throw std::logic_error("canonical graph is disconnected");
  if (path_metric(graph) != space.distances())
    throw std::logic_error("canonical graph does not reproduce the metric");
  return graph;
}

CanonicalGraph canonical_graph(const WeightedGraph& input, std::size_t base) {
  MetricSpace space = shortest_path_metric(input, base);
  const std::size_t n = space.size();
  std::vector<std::vector<bool>> taken(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (const auto& e : input.edges) {
    const std::size_t u = std::min(e.u, e.v);
    const std::size_t v = std::max(e.u, e.v);
    if (taken[u][v] || e.w != space.dist(u, v)) continue;
    bool deletable = false;
    for (std::size_t w = 0; w < n && !deletable; ++w)
      deletable = w != u && w != v && space.dist(u, w) + space.dist(w, v) == space.dist(u, v);
    if (deletable) continue;
    taken[u][v] = true;
    edges.push_back({u, v, e.w});
  }
  CanonicalGraph graph(std::move(space), std::move(edges));
  if (!is_connected(graph)) throw std::logic_error("canonical graph is disconnected");
  return graph;
}

Rational l1d_norm(const CanonicalGraph& graph, const EdgeVector& p) {
  if (static_cast<std::size_t>(p.size()) != graph.num_edges())
    throw Error(ErrorCode::InvalidInput, "edge vector has the wrong length");
  Rational total = 0;
  for (std::size_t k = 0; k < graph.num_edges(); ++k)
    if (p(ix(k)) != 0) total += abs_value(p(ix(k))) * graph.edge(k).weight;
  return total;
}

VertexVector apply_incidence(const CanonicalGraph& graph, const EdgeVector& p) {
  if (static_cast<std::size_t>(p.size()) != graph.num_edges())
    throw Error(ErrorCode::InvalidInput, "edge vector has the wrong length");
  VertexVector f = VertexVector::Zero(ix(graph.num_vertices()));
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const Rational& value = p(ix(k));
    if (value == 0) continue;
    f(ix(graph.edge(k).tail)) += value;
    f(ix(graph.edge(k).head)) -= value;
  }
  return f;
}

Matrix incidence_matrix(const CanonicalGraph& graph) {
  Matrix d = Matrix::Zero(ix(graph.num_vertices()), ix(graph.num_edges()));
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    d(ix(graph.edge(k).head), ix(k)) = 1;
    d(ix(graph.edge(k).tail), ix(k)) = -1;
  }
  return d;
}

std::string to_dot(const CanonicalGraph& graph) {
  std::ostringstream out;
  out << "digraph canonical {\n";
  for (const auto& name : graph.space().points()) out << "  \"" << name << "\";\n";
  for (const auto& e : graph.edges())
    out << "  \"" << graph.space().point(e.tail) << "\" -> \"" << graph.space().point(e.head)
        << "\" [label=\"" << to_string(e.weight) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tcspace
