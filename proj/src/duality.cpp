#include "tcspace/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcspace/lp.hpp"

namespace tcspace {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

// LP over y(v) = l(v) + d(O, v) >= 0 for v != O, with l(O) = 0 substituted
// away. Extra variables, if any, follow the vertex variables.
class PotentialLp {
 public:
  PotentialLp(const CanonicalGraph& graph, Eigen::Index extra)
      : graph_(graph), var_(graph.num_vertices(), -1) {
    Eigen::Index next = 0;
    for (std::size_t v = 0; v < graph.num_vertices(); ++v)
      if (v != graph.space().base()) var_[v] = next++;
    vertex_vars_ = next;
    lp_ = DenseLP<Rational>(next + extra);
  }

  Eigen::Index extra(Eigen::Index i) const { return vertex_vars_ + i; }

  // l(a) - l(b) + Σ extra_terms  (relation)  rhs
  void difference(std::size_t a, std::size_t b, std::vector<DenseLP<Rational>::Term> extra_terms, Relation rel,
                  const Rational& rhs) {
    const std::size_t o = graph_.space().base();
    if (var_[a] >= 0) extra_terms.emplace_back(var_[a], Rational(1));
    if (var_[b] >= 0) extra_terms.emplace_back(var_[b], Rational(-1));
    lp_.add_constraint(extra_terms, rel, rhs + graph_.space().dist(o, a) - graph_.space().dist(o, b));
  }

  void bound(Eigen::Index j, const Rational& upper) { lp_.add_constraint(std::vector<DenseLP<Rational>::Term>{{j, Rational(1)}}, Relation::LessEqual, upper); }

  const DenseLP<Rational>& lp() const { return lp_; }
  Eigen::Index num_vars() const { return lp_.num_vars(); }

  VectorX<Rational> objective_from(const VertexVector& weights) const {
    VectorX<Rational> c = VectorX<Rational>::Zero(lp_.num_vars());
    for (std::size_t v = 0; v < var_.size(); ++v)
      if (var_[v] >= 0) c(var_[v]) = weights(ix(v));
    return c;
  }

  LipschitzFunction function_from(const VectorX<Rational>& x) const {
    const std::size_t o = graph_.space().base();
    VertexVector l = VertexVector::Zero(ix(var_.size()));
    for (std::size_t v = 0; v < var_.size(); ++v)
      if (var_[v] >= 0) l(ix(v)) = x(var_[v]) - graph_.space().dist(o, v);
    return LipschitzFunction(std::move(l));
  }

 private:
  const CanonicalGraph& graph_;
  std::vector<Eigen::Index> var_;
  Eigen::Index vertex_vars_ = 0;
  DenseLP<Rational> lp_{0};
};

void check_length(const CanonicalGraph& graph, std::size_t n) {
  if (n != graph.num_vertices()) throw Error(ErrorCode::InvalidInput, "vertex function has the wrong length");
}

LipschitzFunction shifted(const LipschitzFunction& s, const std::vector<bool>& moved, const Rational& amount) {
  VertexVector values = s.values();
  for (std::size_t v = 0; v < moved.size(); ++v)
    if (moved[v]) values(ix(v)) += amount;
  return LipschitzFunction(std::move(values));
}

}  // namespace

bool is_lipschitz(const CanonicalGraph& graph, const LipschitzFunction& l) {
  check_length(graph, l.size());
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const Edge& e) { return abs_value(l[e.tail] - l[e.head]) <= e.weight; });
}

void check_lipschitz(const CanonicalGraph& graph, const LipschitzFunction& l) {
  check_length(graph, l.size());
  if (l[graph.space().base()] != 0) throw Error(ErrorCode::InvalidInput, "function must vanish at the base point");
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const Edge& e = graph.edge(k);
    if (abs_value(l[e.tail] - l[e.head]) > e.weight)
      throw Error(ErrorCode::NotLipschitz, "Lipschitz constant exceeds 1 on an edge", {e.tail, e.head});
  }
}

Rational evaluate(const CanonicalGraph& graph, const LipschitzFunction& l, const TransportationProblem& f) {
  check_lipschitz(graph, l);
  check_length(graph, f.size());
  Rational total = 0;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v] != 0) total += l[v] * f[v];
  return total;
}

LipschitzFunction supporting_function(const CanonicalGraph& graph, const TransportationProblem& f) {
  check_length(graph, f.size());
  if (f.is_zero()) return LipschitzFunction::zero(graph.num_vertices());
  PotentialLp lp(graph, 0);
  for (const auto& e : graph.edges()) {
    lp.difference(e.tail, e.head, {}, Relation::LessEqual, e.weight);
    lp.difference(e.head, e.tail, {}, Relation::LessEqual, e.weight);
  }
  auto result = lp.lp().maximize(lp.objective_from(f.values()));
  if (!result.optimal()) throw std::logic_error("supporting LP has no optimum");
  return lp.function_from(result.x);
}

bool is_potential(const CanonicalGraph& graph, const TransportationPlan& plan, const LipschitzFunction& l) {
  check_lipschitz(graph, l);
  return std::all_of(plan.terms.begin(), plan.terms.end(), [&](const PlanTerm& t) {
    return l[t.from] - l[t.to] == graph.space().dist(t.from, t.to);
  });
}

DirectedSubgraph downhill_graph(const CanonicalGraph& graph, const LipschitzFunction& l) {
  check_lipschitz(graph, l);
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const Edge& e = graph.edge(k);
    const Rational drop = l[e.tail] - l[e.head];
    if (drop == e.weight) arcs.push_back({e.tail, e.head, k});
    else if (-drop == e.weight) arcs.push_back({e.head, e.tail, k});
  }
  return DirectedSubgraph(std::move(arcs));
}

std::vector<std::size_t> components(const CanonicalGraph& graph, const std::vector<int>& edge_mask) {
  const std::size_t n = graph.num_vertices();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != unset) continue;
    std::vector<std::size_t> stack{root};
    comp[root] = count;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& inc : graph.incident(u))
        if (edge_mask[inc.edge] != 0 && comp[inc.neighbor] == unset) {
          comp[inc.neighbor] = count;
          stack.push_back(inc.neighbor);
        }
    }
    ++count;
  }
  return comp;
}

UniquenessReport is_unique_supporting(const CanonicalGraph& graph, const TransportationProblem& f) {
  check_length(graph, f.size());
  if (f.is_zero()) throw Error(ErrorCode::NullProblem, "the null problem has no distinguished supporting function");
  const MaximalSupport support = maximal_support(graph, f);
  UniquenessReport report;
  report.supporting = supporting_function(graph, f);
  report.component = components(graph, support.sign);
  const auto& comp = report.component;
  const std::size_t count = *std::max_element(comp.begin(), comp.end()) + 1;
  report.unique = count == 1;
  if (report.unique) return report;

  const LipschitzFunction& s = report.supporting;
  const std::size_t n = graph.num_vertices();
  const std::size_t o = graph.space().base();
  auto boundary = [&](const Edge& e) { return comp[e.tail] != comp[e.head]; };
  auto tight = [&](const Edge& e) { return abs_value(s[e.tail] - s[e.head]) == e.weight; };

  const auto downhill = std::find_if(graph.edges().begin(), graph.edges().end(),
                                     [&](const Edge& e) { return boundary(e) && tight(e); });
  std::vector<bool> moved(n, false);
  Rational amount;
  if (downhill != graph.edges().end()) {
    const bool tail_high = s[downhill->tail] > s[downhill->head];
    const std::size_t upper = tail_high ? downhill->tail : downhill->head;
    const std::size_t lower = tail_high ? downhill->head : downhill->tail;

    // U: the lower component and every component that reaches it by going
    // down a tight boundary edge.
    std::vector<bool> in_u(count, false);
    in_u[comp[lower]] = true;
    for (bool grown = true; grown;) {
      grown = false;
      for (const auto& e : graph.edges()) {
        if (!boundary(e) || !tight(e)) continue;
        const std::size_t hi = s[e.tail] > s[e.head] ? e.tail : e.head;
        const std::size_t lo = hi == e.tail ? e.head : e.tail;
        if (in_u[comp[hi]] && !in_u[comp[lo]]) in_u[comp[lo]] = grown = true;
      }
    }
    if (in_u[comp[upper]]) throw std::logic_error("components of T_f admit a downhill cycle");

    std::optional<Rational> delta;
    for (const auto& e : graph.edges()) {
      if (in_u[comp[e.tail]] == in_u[comp[e.head]]) continue;
      const std::size_t z = in_u[comp[e.tail]] ? e.tail : e.head;
      const std::size_t w = z == e.tail ? e.head : e.tail;
      Rational slack = e.weight - (s[z] - s[w]);
      if (!delta || slack < *delta) delta = std::move(slack);
    }
    if (!delta || *delta <= 0) throw std::logic_error("no positive slack between U and V");
    const bool o_in_u = in_u[comp[o]];
    for (std::size_t v = 0; v < n; ++v) moved[v] = in_u[comp[v]] != o_in_u;
    amount = o_in_u ? Rational(-*delta / 2) : Rational(*delta / 2);
  } else {
    std::optional<Rational> omega;
    for (const auto& e : graph.edges()) {
      if (!boundary(e)) continue;
      Rational slack = e.weight - abs_value(s[e.tail] - s[e.head]);
      if (!omega || slack < *omega) omega = std::move(slack);
    }
    for (std::size_t v = 0; v < n; ++v) moved[v] = comp[v] != comp[o];
    amount = *omega / 2;
  }

  LipschitzFunction witness = shifted(s, moved, amount);
  if (witness == s || !is_lipschitz(graph, witness) || witness[o] != 0 ||
      evaluate(graph, witness, f) != evaluate(graph, s, f))
    throw std::logic_error("shifted function is not a second supporting function");
  report.witness = std::move(witness);
  return report;
}

Realization realizable_as_downhill(const CanonicalGraph& graph, const DirectedSubgraph& h) {
  if (h.empty()) throw Error(ErrorCode::InvalidInput, "a downhill graph needs at least one arc");
  PotentialLp lp(graph, 1);
  const Eigen::Index t = lp.extra(0);
  Rational widest = 0;
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const Edge& e = graph.edge(k);
    widest = std::max(widest, e.weight);
    if (h.contains_edge(k)) continue;
    lp.difference(e.tail, e.head, {{t, Rational(1)}}, Relation::LessEqual, e.weight);
    lp.difference(e.head, e.tail, {{t, Rational(1)}}, Relation::LessEqual, e.weight);
  }
  for (const auto& a : h.arcs()) {
    if (a.edge >= graph.num_edges()) throw Error(ErrorCode::InvalidInput, "arc is not a canonical edge");
    const Edge& e = graph.edge(a.edge);
    if (!((a.from == e.tail && a.to == e.head) || (a.from == e.head && a.to == e.tail)))
      throw Error(ErrorCode::InvalidInput, "arc endpoints do not match its edge", {a.from, a.to});
    lp.difference(a.from, a.to, {}, Relation::Equal, e.weight);
  }
  lp.bound(t, widest);

  VectorX<Rational> objective = VectorX<Rational>::Zero(lp.num_vars());
  objective(t) = 1;
  auto result = lp.lp().maximize(objective);
  Realization out;
  if (!result.optimal()) return out;
  out.slack = result.objective;
  out.realizable = out.slack > 0;
  if (out.realizable) {
    out.function = lp.function_from(result.x);
    if (!(downhill_graph(graph, *out.function) == h)) throw std::logic_error("realizing function has a different downhill graph");
  }
  return out;
}

TransportationProblem downhill_to_problem(const CanonicalGraph& graph, const DirectedSubgraph& h) {
  if (!realizable_as_downhill(graph, h).realizable)
    throw Error(ErrorCode::NotRealizable, "directed subgraph is not a downhill graph");
  TransportationPlan plan;
  for (const auto& a : h.arcs()) plan.add(a.from, a.to, Rational(1));
  TransportationProblem f = plan.problem(graph.num_vertices());
  if (!(directed_graph_of(graph, f) == h)) throw std::logic_error("directed graph of the problem differs from H");
  return f;
}

}  // namespace tcspace
