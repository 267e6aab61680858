#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/problem.hpp"

namespace tcspace {

/// Optimal transportation plan from the dense transportation LP over
/// supp+ f x supp- f. Works on the metric directly, never on the canonical
/// graph, so it shares no code path with tc_norm.
struct OraclePlan {
  Rational cost;
  TransportationPlan plan;
};

OraclePlan oracle_transport(const MetricSpace& space, const TransportationProblem& f);
Rational oracle_tc_norm(const MetricSpace& space, const TransportationProblem& f);

/// Maximum of l(f) over all l with l(O) = 0 and |l(x) - l(y)| <= d(x,y) for
/// every pair of points (not only canonical edges).
Rational oracle_dual_norm(const MetricSpace& space, const TransportationProblem& f);

/// Σ_e w(e) |f-mass on one side of e|. Throws NotATree unless the canonical
/// graph is a tree.
Rational oracle_tree_norm(const CanonicalGraph& tree, const TransportationProblem& f);

struct OracleComparison {
  Rational solver;
  Rational oracle;

  bool agree() const { return solver == oracle; }
};

OracleComparison compare_with_oracle(const CanonicalGraph& graph, const TransportationProblem& f);

using Rng = std::mt19937_64;

/// Distances drawn from {1, 5/4, 3/2, 7/4, 2}: always a metric, and the
/// frequent equalities 1 + 1 = 2 delete canonical edges.
MetricSpace random_rational_metric(Rng& rng, std::size_t n);

/// Shortest-path metric of a random connected graph with integer weights in
/// [1, 3]; ties between paths are common.
MetricSpace random_graph_metric(Rng& rng, std::size_t n);

/// Random weighted tree on n vertices (weights in {1/2, 1, 3/2, 2, 3}),
/// returned as its shortest-path metric.
MetricSpace random_tree_metric(Rng& rng, std::size_t n);

/// Zero-sum problem with entries a/b, |a| <= 3, b in {1, 2, 3}; some entries
/// are zero. Never returns the zero problem when n >= 2.
TransportationProblem random_problem(Rng& rng, std::size_t n);

/// Edge vector with entries a/b, |a| <= 3, b in {1, 2}.
EdgeVector random_edge_vector(Rng& rng, std::size_t num_edges);

struct RandomInstance {
  std::string kind;
  MetricSpace space;
  TransportationProblem problem;
};

/// Alternates between the rational and graph-metric generators.
RandomInstance random_instance(Rng& rng, std::size_t min_points, std::size_t max_points);

}  // namespace tcspace
