#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/digraph.hpp"
#include "tcspace/problem.hpp"

namespace tcspace {

/// An edge-level transportation plan: p(e) > 0 moves mass along the
/// reference orientation of e, p(e) < 0 against it. Its problem is
/// apply_incidence(p) and its cost is l1d_norm(p).
using Roadmap = EdgeVector;

/// Closed walk v_0 -> v_1 -> ... -> v_0 through distinct vertices.
/// edges[i] joins vertices[i] and vertices[i+1 mod m]; signs[i] is +1 when
/// that step follows the reference orientation of the edge.
struct OrientedCycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::vector<int> signs;

  std::size_t length() const { return edges.size(); }
};

/// The cycle visiting `vertices` in order and closing back to the first.
/// Throws InvalidInput if it is not a simple cycle of the graph.
OrientedCycle cycle_through(const CanonicalGraph& graph, const std::vector<std::size_t>& vertices);

/// Signed indicator χ_C of the cycle as an edge vector.
EdgeVector signed_indicator(const CanonicalGraph& graph, const OrientedCycle& cycle);

/// Throws InvalidInput unless consecutive edges share endpoints and every
/// vertex is entered and left exactly once.
void check_cycle(const CanonicalGraph& graph, const OrientedCycle& cycle);

struct CycleBasis {
  std::vector<OrientedCycle> cycles;
  std::vector<std::size_t> forest;  // spanning forest edge indices
};

/// Fundamental cycles of a BFS spanning forest, one per non-forest edge.
/// Each cycle traverses its defining edge along the reference orientation.
CycleBasis cycle_basis(const CanonicalGraph& graph);

Rational plan_cost(const MetricSpace& space, const TransportationPlan& plan);

/// Routes each term along the lexicographically first shortest path and
/// merges terms on the same edge (cancellations can only lower the cost).
Roadmap plan_to_roadmap(const CanonicalGraph& graph, const TransportationPlan& plan);

/// Greedy feasible plan: positive mass (in point order) matched to negative
/// mass (in point order).
TransportationPlan greedy_plan(const TransportationProblem& f);

/// Either "optimal" (no cycle) or an improving cycle with its gain: the weight
/// of its support edges traversed against the roadmap's direction minus the
/// weight of all its other edges.
struct OptimalityCertificate {
  std::optional<OrientedCycle> cycle;
  Rational gain;

  bool optimal() const { return !cycle.has_value(); }
};

/// Searches the residual digraph (each edge both ways at cost +w, except the
/// arc reversing the roadmap's flow, which costs -w) for a minimum mean
/// cycle. A negative mean means the cycle improves p.
OptimalityCertificate improving_cycle(const CanonicalGraph& graph, const Roadmap& p);

/// p + α χ_c with α the smallest |p(e)| among edges the cycle traverses
/// against the flow. Cost drops by exactly α * gain. Throws NotImprovable for
/// an "optimal" certificate.
Roadmap cancel_cycle(const CanonicalGraph& graph, const Roadmap& p, const OptimalityCertificate& certificate);

struct TcSolution {
  Rational norm;
  Roadmap roadmap;
  std::size_t cancellations = 0;
};

/// Transportation cost norm by minimum-mean cycle canceling from the greedy
/// shortest-path roadmap. The returned roadmap is certified optimal.
TcSolution tc_norm(const CanonicalGraph& graph, const TransportationProblem& f);

/// T_f: edges used by some optimal roadmap, and the common sign all optimal
/// roadmaps take there. `witnesses` are optimal roadmaps whose supports cover
/// T_f.
struct MaximalSupport {
  Rational norm;
  std::vector<int> sign;  // per edge: +1, -1, or 0 when the edge is not in T_f
  std::vector<Roadmap> witnesses;

  std::vector<std::size_t> edges() const;
  bool contains(std::size_t edge) const { return sign[edge] != 0; }
};

/// Solves, per uncovered edge and sign, the exact LP maximizing ±p(e) over the
/// optimal face {pr_p = f, Σ w (p+ + p-) <= ‖f‖_tc}, with p split into
/// nonnegative parts.
MaximalSupport maximal_support(const CanonicalGraph& graph, const TransportationProblem& f);

/// Average of the witnesses: an optimal roadmap whose support is T_f.
Roadmap maximal_roadmap(const CanonicalGraph& graph, const TransportationProblem& f);
Roadmap maximal_roadmap(const MaximalSupport& support, std::size_t num_edges);

/// T_f with each edge directed along the transportation. Throws NullProblem
/// for f = 0.
DirectedSubgraph directed_graph_of(const CanonicalGraph& graph, const TransportationProblem& f);
DirectedSubgraph directed_graph_of(const CanonicalGraph& graph, const MaximalSupport& support);

}  // namespace tcspace
