#include "tcspace/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tcspace/lp.hpp"
#include "tcspace/solver.hpp"

namespace tcspace {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

OraclePlan oracle_transport(const MetricSpace& space, const TransportationProblem& f) {
  if (f.size() != space.size()) throw Error(ErrorCode::InvalidInput, "problem has the wrong length");
  std::vector<std::size_t> sources, sinks;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] > 0) sources.push_back(v);
    if (f[v] < 0) sinks.push_back(v);
  }
  OraclePlan out{Rational(0), {}};
  if (sources.empty()) return out;

  const std::size_t cols = sinks.size();
  auto var = [cols](std::size_t s, std::size_t t) { return ix(s * cols + t); };
  DenseLP<Rational> lp(ix(sources.size() * cols));
  for (std::size_t s = 0; s < sources.size(); ++s) {
    std::vector<DenseLP<Rational>::Term> terms;
    for (std::size_t t = 0; t < cols; ++t) terms.emplace_back(var(s, t), Rational(1));
    lp.add_constraint(terms, Relation::Equal, f[sources[s]]);
  }
  for (std::size_t t = 0; t < cols; ++t) {
    std::vector<DenseLP<Rational>::Term> terms;
    for (std::size_t s = 0; s < sources.size(); ++s) terms.emplace_back(var(s, t), Rational(1));
    lp.add_constraint(terms, Relation::Equal, Rational(-f[sinks[t]]));
  }
  VectorX<Rational> cost(lp.num_vars());
  for (std::size_t s = 0; s < sources.size(); ++s)
    for (std::size_t t = 0; t < cols; ++t) cost(var(s, t)) = space.dist(sources[s], sinks[t]);

  auto result = lp.minimize(cost);
  if (!result.optimal()) throw std::logic_error("transportation LP has no optimum");
  out.cost = result.objective;
  for (std::size_t s = 0; s < sources.size(); ++s)
    for (std::size_t t = 0; t < cols; ++t) out.plan.add(sources[s], sinks[t], result.x(var(s, t)));
  return out;
}

Rational oracle_tc_norm(const MetricSpace& space, const TransportationProblem& f) {
  return oracle_transport(space, f).cost;
}

Rational oracle_dual_norm(const MetricSpace& space, const TransportationProblem& f) {
  const std::size_t n = space.size();
  const std::size_t o = space.base();
  if (f.size() != n) throw Error(ErrorCode::InvalidInput, "problem has the wrong length");
  // y(v) = l(v) + d(O, v) >= 0; O itself has no variable.
  std::vector<Eigen::Index> var(n, -1);
  Eigen::Index next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (v != o) var[v] = next++;

  DenseLP<Rational> lp(next);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<DenseLP<Rational>::Term> terms;
      if (var[x] >= 0) terms.emplace_back(var[x], Rational(1));
      if (var[y] >= 0) terms.emplace_back(var[y], Rational(-1));
      lp.add_constraint(terms, Relation::LessEqual, space.dist(x, y) + space.dist(o, x) - space.dist(o, y));
    }
  VectorX<Rational> objective = VectorX<Rational>::Zero(next);
  Rational offset = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (var[v] >= 0) objective(var[v]) = f[v];
    offset += f[v] * space.dist(o, v);
  }
  auto result = lp.maximize(objective);
  if (!result.optimal()) throw std::logic_error("dual LP has no optimum");
  return result.objective - offset;
}

Rational oracle_tree_norm(const CanonicalGraph& tree, const TransportationProblem& f) {
  const std::size_t n = tree.num_vertices();
  if (tree.num_edges() + 1 != n || !is_connected(tree))
    throw Error(ErrorCode::NotATree, "canonical graph is not a tree");
  if (f.size() != n) throw Error(ErrorCode::InvalidInput, "problem has the wrong length");

  // Order vertices so that every vertex follows its parent.
  std::vector<std::size_t> order{0}, parent_edge(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& inc : tree.incident(order[i]))
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        parent_edge[inc.neighbor] = inc.edge;
        order.push_back(inc.neighbor);
      }

  std::vector<Rational> below(n);
  for (std::size_t v = 0; v < n; ++v) below[v] = f[v];
  Rational total = 0;
  for (std::size_t i = order.size(); i-- > 1;) {
    const std::size_t v = order[i];
    const Edge& e = tree.edge(parent_edge[v]);
    total += e.weight * abs_value(below[v]);
    below[e.tail == v ? e.head : e.tail] += below[v];
  }
  return total;
}

OracleComparison compare_with_oracle(const CanonicalGraph& graph, const TransportationProblem& f) {
  return {tc_norm(graph, f).norm, oracle_tc_norm(graph.space(), f)};
}

MetricSpace random_rational_metric(Rng& rng, std::size_t n) {
  Matrix d = Matrix::Zero(ix(n), ix(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d(ix(i), ix(j)) = Rational(4 + uniform(rng, 0, 4), 4);
      d(ix(j), ix(i)) = d(ix(i), ix(j));
    }
  return validate_metric(numbered("p", n), std::move(d));
}

MetricSpace random_graph_metric(Rng& rng, std::size_t n) {
  WeightedGraph graph{numbered("g", n), {}};
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  auto connect = [&](std::size_t u, std::size_t v) {
    if (u == v || used[u][v]) return;
    used[u][v] = used[v][u] = true;
    graph.edges.push_back({u, v, Rational(uniform(rng, 1, 3))});
  };
  for (std::size_t v = 1; v < n; ++v) connect(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1)), v);
  const long extra = uniform(rng, 0, static_cast<long>(n));
  for (long i = 0; i < extra; ++i) {
    const auto u = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    connect(u, v);
  }
  return shortest_path_metric(graph);
}

MetricSpace random_tree_metric(Rng& rng, std::size_t n) {
  static const Rational weights[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  WeightedGraph graph{numbered("t", n), {}};
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1));
    graph.edges.push_back({parent, v, weights[uniform(rng, 0, 4)]});
  }
  return shortest_path_metric(graph);
}

TransportationProblem random_problem(Rng& rng, std::size_t n) {
  for (;;) {
    VertexVector f = VertexVector::Zero(ix(n));
    Rational sum = 0;
    for (std::size_t v = 0; v + 1 < n; ++v) {
      if (uniform(rng, 0, 3) == 0) continue;
      const long num = uniform(rng, -3, 3);
      f(ix(v)) = Rational(num, uniform(rng, 1, 3));
      sum += f(ix(v));
    }
    f(ix(n - 1)) = -sum;
    if (n < 2 || !f.isZero()) return TransportationProblem(std::move(f));
  }
}

EdgeVector random_edge_vector(Rng& rng, std::size_t num_edges) {
  EdgeVector p(ix(num_edges));
  for (std::size_t k = 0; k < num_edges; ++k) {
    const long num = uniform(rng, -3, 3);
    p(ix(k)) = Rational(num, uniform(rng, 1, 2));
  }
  return p;
}

RandomInstance random_instance(Rng& rng, std::size_t min_points, std::size_t max_points) {
  const auto n = static_cast<std::size_t>(uniform(rng, static_cast<long>(min_points), static_cast<long>(max_points)));
  const bool rational = uniform(rng, 0, 1) == 0;
  MetricSpace space = rational ? random_rational_metric(rng, n) : random_graph_metric(rng, n);
  TransportationProblem f = random_problem(rng, n);
  return {rational ? "rational" : "graph", std::move(space), std::move(f)};
}

}  // namespace tcspace
