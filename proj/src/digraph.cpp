#include "tcspace/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace tcspace {

DirectedSubgraph::DirectedSubgraph(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return std::tie(a.edge, a.from) < std::tie(b.edge, b.from); });
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

DirectedSubgraph DirectedSubgraph::from_pairs(const CanonicalGraph& graph,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Arc> arcs;
  for (const auto& [from, to] : pairs) {
    auto edge = graph.find_edge(from, to);
    if (!edge) throw Error(ErrorCode::InvalidInput, "not an edge of the canonical graph", {from, to});
    arcs.push_back({from, to, *edge});
  }
  return DirectedSubgraph(std::move(arcs));
}

bool DirectedSubgraph::contains_edge(std::size_t edge) const {
  return std::any_of(arcs_.begin(), arcs_.end(), [edge](const Arc& a) { return a.edge == edge; });
}

bool DirectedSubgraph::is_acyclic(std::size_t num_vertices) const {
  std::vector<std::size_t> indegree(num_vertices, 0);
  std::vector<std::vector<std::size_t>> out(num_vertices);
  for (const auto& a : arcs_) {
    out[a.from].push_back(a.to);
    ++indegree[a.to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < num_vertices; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == num_vertices;
}

std::string to_dot(const CanonicalGraph& graph, const DirectedSubgraph& arcs) {
  std::ostringstream out;
  out << "digraph directed {\n";
  for (const auto& name : graph.space().points()) out << "  \"" << name << "\";\n";
  for (const auto& a : arcs.arcs())
    out << "  \"" << graph.space().point(a.from) << "\" -> \"" << graph.space().point(a.to) << "\" [label=\""
        << to_string(graph.edge(a.edge).weight) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tcspace
