#include "tcspace/families.hpp"

#include <stdexcept>

namespace tcspace {
namespace {

Family from_graph(WeightedGraph graph, std::string name, std::vector<std::pair<std::string, long>> params) {
  FamilyDescriptor descriptor{std::move(name), std::move(params), std::vector<int>(graph.vertices.size(), 0), false, std::nullopt};
  return {std::move(graph), std::move(descriptor), std::nullopt};
}

void require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorCode::InvalidInput, message);
}

}  // namespace

WeightedGraph to_weighted_graph(const TwoPortGraph& g) {
  WeightedGraph out{g.vertices, {}};
  out.edges.reserve(g.edges.size());
  for (const auto& a : g.edges) out.edges.push_back({a.from, a.to, a.weight});
  return out;
}

void check_normalized(const TwoPortGraph& g) {
  if (g.bottom >= g.vertices.size() || g.top >= g.vertices.size() || g.bottom == g.top)
    throw Error(ErrorCode::NotNormalized, "top and bottom must be two distinct vertices");
  std::vector<Rational> from_bottom;
  try {
    from_bottom = single_source_distances(to_weighted_graph(g), g.bottom);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotNormalized, std::string("two-port graph is not a connected weighted graph: ") + e.what());
  }
  if (from_bottom[g.top] != 1) throw Error(ErrorCode::NotNormalized, "distance from bottom to top must be 1");
}

TwoPortGraph unit_edge() { return {{"bottom", "top"}, {{0, 1, Rational(1), "e"}}, 0, 1}; }

TwoPortGraph quadrilateral_two_port() {
  const Rational half(1, 2);
  return {{"bottom", "top", "a", "b"}, {{0, 2, half, "0"}, {2, 1, half, "1"}, {0, 3, half, "2"}, {3, 1, half, "3"}}, 0, 1};
}

TwoPortGraph k23_two_port() {
  const Rational half(1, 2);
  TwoPortGraph g{{"bottom", "top", "m1", "m2", "m3"}, {}, 0, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    g.edges.push_back({0, 2 + i, half, std::to_string(2 * i)});
    g.edges.push_back({2 + i, 1, half, std::to_string(2 * i + 1)});
  }
  return g;
}

TwoPortGraph compose(const TwoPortGraph& h, const TwoPortGraph& g) {
  check_normalized(h);
  check_normalized(g);
  TwoPortGraph out{h.vertices, {}, h.bottom, h.top};
  for (const auto& arc : h.edges) {
    std::vector<std::size_t> image(g.vertices.size());
    for (std::size_t x = 0; x < g.vertices.size(); ++x) {
      if (x == g.bottom) image[x] = arc.from;
      else if (x == g.top) image[x] = arc.to;
      else {
        image[x] = out.vertices.size();
        out.vertices.push_back(arc.label + "." + g.vertices[x]);
      }
    }
    for (const auto& inner : g.edges)
      out.edges.push_back({image[inner.from], image[inner.to], inner.weight * arc.weight, arc.label + "." + inner.label});
  }

  const WeightedGraph before = to_weighted_graph(h);
  const WeightedGraph after = to_weighted_graph(out);
  for (std::size_t u = 0; u < h.vertices.size(); ++u) {
    const auto old_row = single_source_distances(before, u);
    const auto new_row = single_source_distances(after, u);
    for (std::size_t v = 0; v < h.vertices.size(); ++v)
      if (old_row[v] != new_row[v]) throw std::logic_error("composition does not embed V(H) isometrically");
  }
  return out;
}

std::optional<long> FamilyDescriptor::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

std::string FamilyDescriptor::level_name(int level) const {
  return (name == "diamond" ? "D_" : "B_") + std::to_string(level);
}

Family diamond(int n) {
  require(n >= 0, "diamond needs n >= 0");
  TwoPortGraph g = unit_edge();
  std::vector<int> generation{0, 0};
  for (int level = 1; level <= n; ++level) {
    TwoPortGraph next{g.vertices, {}, g.bottom, g.top};
    for (const auto& arc : g.edges) {
      const std::size_t a = next.vertices.size();
      next.vertices.push_back(arc.label + ".a");
      next.vertices.push_back(arc.label + ".b");
      generation.push_back(level);
      generation.push_back(level);
      const Rational half = arc.weight / 2;
      next.edges.push_back({arc.from, a, half, arc.label + ".0"});
      next.edges.push_back({a, arc.to, half, arc.label + ".1"});
      next.edges.push_back({arc.from, a + 1, half, arc.label + ".2"});
      next.edges.push_back({a + 1, arc.to, half, arc.label + ".3"});
    }
    g = std::move(next);
  }
  FamilyDescriptor descriptor{"diamond", {{"n", n}}, std::move(generation), true, quadrilateral_two_port()};
  return {to_weighted_graph(g), std::move(descriptor), std::move(g)};
}

Family grid(int n) {
  require(n >= 2, "grid needs n >= 2");
  WeightedGraph graph;
  auto at = [n](int r, int c) { return static_cast<std::size_t>((r - 1) * n + (c - 1)); };
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) graph.vertices.push_back("v" + std::to_string(r) + "_" + std::to_string(c));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      if (c < n) graph.edges.push_back({at(r, c), at(r, c + 1), Rational(1)});
      if (r < n) graph.edges.push_back({at(r, c), at(r + 1, c), Rational(1)});
    }
  return from_graph(std::move(graph), "grid", {{"n", n}});
}

Family complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite needs m, n >= 1");
  WeightedGraph graph;
  for (int i = 1; i <= m; ++i) graph.vertices.push_back("a" + std::to_string(i));
  for (int j = 1; j <= n; ++j) graph.vertices.push_back("b" + std::to_string(j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      graph.edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(m + j), Rational(1)});
  return from_graph(std::move(graph), "complete_bipartite", {{"m", m}, {"n", n}});
}

Family cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  WeightedGraph graph;
  for (int i = 1; i <= n; ++i) graph.vertices.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    graph.edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n), Rational(1)});
  return from_graph(std::move(graph), "cycle", {{"n", n}});
}

Family recursive_family(const TwoPortGraph& base, int n) {
  require(n >= 0, "recursive family needs n >= 0");
  check_normalized(base);
  TwoPortGraph g = unit_edge();
  std::vector<int> generation{0, 0};
  for (int level = 1; level <= n; ++level) {
    g = compose(g, base);
    generation.resize(g.vertices.size(), level);
  }
  FamilyDescriptor descriptor{"recursive", {{"n", n}}, std::move(generation), true, base};
  return {to_weighted_graph(g), std::move(descriptor), std::move(g)};
}

Family family_level(const FamilyDescriptor& descriptor, int level) {
  if (!descriptor.recursive || !descriptor.base)
    throw Error(ErrorCode::PeelNotApplicable, "family '" + descriptor.name + "' is not a recursive composition");
  if (descriptor.name == "diamond") return diamond(level);
  return recursive_family(*descriptor.base, level);
}

std::vector<Family> family_levels(const FamilyDescriptor& descriptor, int n) {
  if (!descriptor.recursive || !descriptor.base)
    throw Error(ErrorCode::PeelNotApplicable, "family '" + descriptor.name + "' is not a recursive composition");
  require(n >= 0, "levels need n >= 0");
  std::vector<Family> levels;
  if (descriptor.name == "diamond") {
    for (int m = 0; m <= n; ++m) levels.push_back(diamond(m));
    return levels;
  }
  check_normalized(*descriptor.base);
  TwoPortGraph g = unit_edge();
  std::vector<int> generation{0, 0};
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      g = compose(g, *descriptor.base);
      generation.resize(g.vertices.size(), m);
    }
    FamilyDescriptor level{"recursive", {{"n", m}}, generation, true, descriptor.base};
    levels.push_back({to_weighted_graph(g), std::move(level), g});
  }
  return levels;
}

}  // namespace tcspace
