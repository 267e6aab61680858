#pragma once

#include <optional>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/digraph.hpp"
#include "tcspace/problem.hpp"
#include "tcspace/solver.hpp"

namespace tcspace {

/// Values of a function on the points of a space. Supporting functions and
/// potentials are 1-Lipschitz and vanish at the base point; check_lipschitz
/// enforces both.
class LipschitzFunction {
 public:
  LipschitzFunction() = default;
  explicit LipschitzFunction(VertexVector values) : values_(std::move(values)) {}

  static LipschitzFunction zero(std::size_t n) { return LipschitzFunction(VertexVector::Zero(static_cast<Eigen::Index>(n))); }

  const VertexVector& values() const { return values_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  const Rational& operator[](std::size_t v) const { return values_(static_cast<Eigen::Index>(v)); }

  friend bool operator==(const LipschitzFunction& a, const LipschitzFunction& b) {
    return a.values_.size() == b.values_.size() && a.values_ == b.values_;
  }

 private:
  VertexVector values_;
};

/// Edge constraints suffice: geodesics in the canonical graph realize every
/// distance.
bool is_lipschitz(const CanonicalGraph& graph, const LipschitzFunction& l);

/// Throws NotLipschitz (with the offending edge) or InvalidInput when l has
/// the wrong length or l(O) != 0.
void check_lipschitz(const CanonicalGraph& graph, const LipschitzFunction& l);

/// l(f) = Σ_v l(v) f(v).
Rational evaluate(const CanonicalGraph& graph, const LipschitzFunction& l, const TransportationProblem& f);

/// Exact LP maximum of l(f) over 1-Lipschitz l with l(O) = 0. Returns the
/// zero function for f = 0.
LipschitzFunction supporting_function(const CanonicalGraph& graph, const TransportationProblem& f);

/// Every term of the plan is tight: l(x) - l(y) = d(x, y).
bool is_potential(const CanonicalGraph& graph, const TransportationPlan& plan, const LipschitzFunction& l);

/// Edges with |l(u) - l(v)| = d(u, v), directed toward the smaller value.
DirectedSubgraph downhill_graph(const CanonicalGraph& graph, const LipschitzFunction& l);

struct UniquenessReport {
  bool unique = false;
  LipschitzFunction supporting;
  /// A second supporting function, present exactly when !unique.
  std::optional<LipschitzFunction> witness;
  /// Component index of every point in (X, T_f).
  std::vector<std::size_t> component;
};

/// Unique iff (X, T_f) is connected. Otherwise the witness is built by
/// shifting whole components of (X, T_f) by a constant: half the smallest
/// slack of the boundary edges. Throws NullProblem for f = 0.
UniquenessReport is_unique_supporting(const CanonicalGraph& graph, const TransportationProblem& f);

struct Realization {
  bool realizable = false;
  Rational slack;  // optimal t
  std::optional<LipschitzFunction> function;
};

/// Maximizes t subject to l(u) - l(v) = d(u, v) on the arcs of H and
/// |l(a) - l(b)| <= d(a, b) - t on every other edge. H is exactly a
/// downhill graph iff the optimum is feasible with t > 0. Throws
/// InvalidInput for an empty H.
Realization realizable_as_downhill(const CanonicalGraph& graph, const DirectedSubgraph& h);

/// f = Σ_{u->v in H} (1_u - 1_v); its directed graph is H again (checked).
/// Throws NotRealizable when H is not a downhill graph.
TransportationProblem downhill_to_problem(const CanonicalGraph& graph, const DirectedSubgraph& h);

/// Connected components of (X, T): component index per vertex, numbered in
/// order of their smallest vertex.
std::vector<std::size_t> components(const CanonicalGraph& graph, const std::vector<int>& edge_mask);

}  // namespace tcspace
