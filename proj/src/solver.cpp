#include "tcspace/solver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tcspace/detail/min_mean_cycle.hpp"
#include "tcspace/lp.hpp"

namespace tcspace {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void merge_signs(std::vector<int>& sign, const Roadmap& p) {
  for (std::size_t k = 0; k < sign.size(); ++k) {
    const int s = tcspace::sign(p(ix(k)));
    if (s == 0) continue;
    if (sign[k] != 0 && sign[k] != s)
      throw std::logic_error("two optimal roadmaps disagree in sign on an edge");
    sign[k] = s;
  }
}

}  // namespace

OrientedCycle cycle_through(const CanonicalGraph& graph, const std::vector<std::size_t>& vertices) {
  OrientedCycle cycle;
  cycle.vertices = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::size_t a = vertices[i];
    const std::size_t b = vertices[(i + 1) % vertices.size()];
    auto edge = graph.find_edge(a, b);
    if (!edge) throw Error(ErrorCode::InvalidInput, "consecutive cycle vertices are not adjacent", {a, b});
    cycle.edges.push_back(*edge);
    cycle.signs.push_back(graph.edge(*edge).tail == a ? 1 : -1);
  }
  check_cycle(graph, cycle);
  return cycle;
}

EdgeVector signed_indicator(const CanonicalGraph& graph, const OrientedCycle& cycle) {
  EdgeVector chi = EdgeVector::Zero(ix(graph.num_edges()));
  for (std::size_t i = 0; i < cycle.edges.size(); ++i) chi(ix(cycle.edges[i])) = cycle.signs[i];
  return chi;
}

void check_cycle(const CanonicalGraph& graph, const OrientedCycle& cycle) {
  const std::size_t m = cycle.vertices.size();
  if (m < 3 || cycle.edges.size() != m || cycle.signs.size() != m)
    throw Error(ErrorCode::InvalidInput, "a cycle needs at least 3 consistent steps");
  std::vector<std::size_t> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidInput, "cycle repeats a vertex");
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = graph.edge(cycle.edges[i]);
    const std::size_t a = cycle.vertices[i];
    const std::size_t b = cycle.vertices[(i + 1) % m];
    const bool forward = e.tail == a && e.head == b;
    const bool backward = e.tail == b && e.head == a;
    if (!(forward && cycle.signs[i] == 1) && !(backward && cycle.signs[i] == -1))
      throw Error(ErrorCode::InvalidInput, "cycle step does not match its edge", {cycle.edges[i]});
  }
}

CycleBasis cycle_basis(const CanonicalGraph& graph) {
  const std::size_t n = graph.num_vertices();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, none), depth(n, 0);
  std::vector<bool> seen(n, false), in_forest(graph.num_edges(), false);
  CycleBasis basis;

  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (const auto& inc : graph.incident(u)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        parent[inc.neighbor] = u;
        depth[inc.neighbor] = depth[u] + 1;
        in_forest[inc.edge] = true;
        basis.forest.push_back(inc.edge);
        queue.push(inc.neighbor);
      }
    }
  }
  std::sort(basis.forest.begin(), basis.forest.end());

  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    if (in_forest[k]) continue;
    const std::size_t tail = graph.edge(k).tail;
    const std::size_t head = graph.edge(k).head;
    // Tree path head -> lca <- tail.
    std::vector<std::size_t> up_from_head{head}, up_from_tail{tail};
    std::size_t a = head, b = tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        a = parent[a];
        up_from_head.push_back(a);
      } else {
        b = parent[b];
        up_from_tail.push_back(b);
      }
    }
    std::vector<std::size_t> vertices{tail};
    vertices.insert(vertices.end(), up_from_head.begin(), up_from_head.end());
    // up_from_tail ends at the lca (already listed) and starts at tail (the cycle's start).
    for (auto it = up_from_tail.rbegin() + 1; it + 1 != up_from_tail.rend(); ++it) vertices.push_back(*it);
    basis.cycles.push_back(cycle_through(graph, vertices));
  }
  return basis;
}

Rational plan_cost(const MetricSpace& space, const TransportationPlan& plan) {
  Rational cost = 0;
  for (const auto& t : plan.terms) cost += t.amount * space.dist(t.from, t.to);
  return cost;
}

Roadmap plan_to_roadmap(const CanonicalGraph& graph, const TransportationPlan& plan) {
  Roadmap p = Roadmap::Zero(ix(graph.num_edges()));
  for (const auto& term : plan.terms) {
    if (term.amount < 0) throw Error(ErrorCode::InvalidInput, "plan amounts must be nonnegative");
    if (term.from == term.to || term.amount == 0) continue;
    const auto path = graph.shortest_path(term.from, term.to);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const std::size_t k = *graph.find_edge(path[i], path[i + 1]);
      if (graph.edge(k).tail == path[i]) p(ix(k)) += term.amount;
      else p(ix(k)) -= term.amount;
    }
  }
  return p;
}

TransportationPlan greedy_plan(const TransportationProblem& f) {
  TransportationPlan plan;
  std::vector<std::size_t> sources, sinks;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] > 0) sources.push_back(v);
    if (f[v] < 0) sinks.push_back(v);
  }
  std::size_t i = 0, j = 0;
  Rational supply = sources.empty() ? Rational(0) : f[sources[0]];
  Rational demand = sinks.empty() ? Rational(0) : Rational(-f[sinks[0]]);
  while (i < sources.size() && j < sinks.size()) {
    const Rational amount = std::min(supply, demand);
    plan.add(sources[i], sinks[j], amount);
    supply -= amount;
    demand -= amount;
    if (supply == 0 && ++i < sources.size()) supply = f[sources[i]];
    if (demand == 0 && ++j < sinks.size()) demand = -f[sinks[j]];
  }
  return plan;
}

OptimalityCertificate improving_cycle(const CanonicalGraph& graph, const Roadmap& p) {
  if (static_cast<std::size_t>(p.size()) != graph.num_edges())
    throw Error(ErrorCode::InvalidInput, "roadmap has the wrong length");
  std::vector<detail::CostArc<Rational>> arcs;
  arcs.reserve(2 * graph.num_edges());
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const Edge& e = graph.edge(k);
    const int s = sign(p(ix(k)));
    arcs.push_back({e.tail, e.head, s < 0 ? Rational(-e.weight) : e.weight});
    arcs.push_back({e.head, e.tail, s > 0 ? Rational(-e.weight) : e.weight});
  }
  auto found = detail::minimum_mean_cycle(graph.num_vertices(), arcs);
  if (!found || found->mean >= 0) return {std::nullopt, Rational(0)};

  OrientedCycle cycle;
  Rational cost = 0;
  for (std::size_t a : found->arcs) {
    cycle.vertices.push_back(arcs[a].from);
    cycle.edges.push_back(a / 2);
    cycle.signs.push_back(a % 2 == 0 ? 1 : -1);
    cost += arcs[a].cost;
  }
  return {std::move(cycle), Rational(-cost)};
}

Roadmap cancel_cycle(const CanonicalGraph& graph, const Roadmap& p, const OptimalityCertificate& certificate) {
  if (certificate.optimal() || certificate.gain <= 0)
    throw Error(ErrorCode::NotImprovable, "certificate carries no improving cycle");
  const OrientedCycle& cycle = *certificate.cycle;
  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
    const Rational& value = p(ix(cycle.edges[i]));
    if (value == 0 || sign(value) == cycle.signs[i]) continue;
    Rational magnitude = abs_value(value);
    if (!alpha || magnitude < *alpha) alpha = std::move(magnitude);
  }
  if (!alpha) throw std::logic_error("improving cycle reverses no support edge");

  Roadmap next = p + *alpha * signed_indicator(graph, cycle);
  if (l1d_norm(graph, next) != l1d_norm(graph, p) - *alpha * certificate.gain)
    throw std::logic_error("cycle cancellation did not lower the cost by alpha * gain");
  return next;
}

TcSolution tc_norm(const CanonicalGraph& graph, const TransportationProblem& f) {
  if (f.size() != graph.num_vertices()) throw Error(ErrorCode::InvalidInput, "problem has the wrong length");
  TcSolution solution;
  solution.roadmap = plan_to_roadmap(graph, greedy_plan(f));
  solution.norm = l1d_norm(graph, solution.roadmap);
  for (;;) {
    auto certificate = improving_cycle(graph, solution.roadmap);
    if (certificate.optimal()) break;
    solution.roadmap = cancel_cycle(graph, solution.roadmap, certificate);
    Rational cost = l1d_norm(graph, solution.roadmap);
    if (cost >= solution.norm) throw std::logic_error("cycle canceling failed to decrease the cost");
    solution.norm = std::move(cost);
    ++solution.cancellations;
  }
  return solution;
}

std::vector<std::size_t> MaximalSupport::edges() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sign.size(); ++k)
    if (sign[k] != 0) out.push_back(k);
  return out;
}

MaximalSupport maximal_support(const CanonicalGraph& graph, const TransportationProblem& f) {
  const std::size_t m = graph.num_edges();
  const std::size_t n = graph.num_vertices();
  TcSolution optimum = tc_norm(graph, f);
  MaximalSupport support{optimum.norm, std::vector<int>(m, 0), {}};
  if (f.is_zero()) return support;
  support.witnesses.push_back(optimum.roadmap);
  merge_signs(support.sign, optimum.roadmap);

  // Variables: p+ (0..m-1), p- (m..2m-1).
  DenseLP<Rational> lp(ix(2 * m));
  for (std::size_t v = 0; v + 1 < n; ++v) {
    std::vector<DenseLP<Rational>::Term> terms;
    for (const auto& inc : graph.incident(v)) {
      const int s = graph.edge(inc.edge).tail == v ? 1 : -1;
      terms.emplace_back(ix(inc.edge), Rational(s));
      terms.emplace_back(ix(m + inc.edge), Rational(-s));
    }
    lp.add_constraint(terms, Relation::Equal, f[v]);
  }
  {
    std::vector<DenseLP<Rational>::Term> terms;
    for (std::size_t k = 0; k < m; ++k) {
      terms.emplace_back(ix(k), graph.edge(k).weight);
      terms.emplace_back(ix(m + k), graph.edge(k).weight);
    }
    lp.add_constraint(terms, Relation::LessEqual, optimum.norm);
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (support.sign[k] != 0) continue;
    for (int s : {1, -1}) {
      VectorX<Rational> objective = VectorX<Rational>::Zero(ix(2 * m));
      objective(ix(k)) = s;
      objective(ix(m + k)) = -s;
      auto result = lp.maximize(objective);
      if (!result.optimal()) throw std::logic_error("optimal-face LP is not solvable");
      if (result.objective <= 0) continue;
      Roadmap witness = result.x.head(ix(m)) - result.x.tail(ix(m));
      if (apply_incidence(graph, witness) != f.values() || l1d_norm(graph, witness) != optimum.norm)
        throw std::logic_error("optimal-face LP returned a non-optimal roadmap");
      merge_signs(support.sign, witness);
      support.witnesses.push_back(std::move(witness));
      break;
    }
  }
  return support;
}

Roadmap maximal_roadmap(const MaximalSupport& support, std::size_t num_edges) {
  Roadmap p = Roadmap::Zero(ix(num_edges));
  if (support.witnesses.empty()) return p;
  for (const auto& w : support.witnesses) p += w;
  p /= Rational(static_cast<long>(support.witnesses.size()));
  for (std::size_t k = 0; k < num_edges; ++k)
    if (sign(p(ix(k))) != support.sign[k]) throw std::logic_error("averaged roadmap misses part of T_f");
  return p;
}

Roadmap maximal_roadmap(const CanonicalGraph& graph, const TransportationProblem& f) {
  MaximalSupport support = maximal_support(graph, f);
  Roadmap p = maximal_roadmap(support, graph.num_edges());
  if (l1d_norm(graph, p) != support.norm) throw std::logic_error("averaged roadmap is not optimal");
  return p;
}

DirectedSubgraph directed_graph_of(const CanonicalGraph& graph, const MaximalSupport& support) {
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < support.sign.size(); ++k) {
    if (support.sign[k] == 0) continue;
    const Edge& e = graph.edge(k);
    if (support.sign[k] > 0) arcs.push_back({e.tail, e.head, k});
    else arcs.push_back({e.head, e.tail, k});
  }
  return DirectedSubgraph(std::move(arcs));
}

DirectedSubgraph directed_graph_of(const CanonicalGraph& graph, const TransportationProblem& f) {
  if (f.is_zero()) throw Error(ErrorCode::NullProblem, "the null problem has no directed graph");
  return directed_graph_of(graph, maximal_support(graph, f));
}

}  // namespace tcspace
