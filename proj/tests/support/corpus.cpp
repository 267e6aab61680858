#include "corpus.hpp"

#include "tcspace/families.hpp"

namespace tcspace::testing {

MetricSpace make_space(std::vector<std::string> points, const std::vector<std::vector<std::string>>& dist) {
  const auto n = static_cast<Eigen::Index>(dist.size());
  Matrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = parse_rational(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return validate_metric(std::move(points), std::move(d));
}

MetricSpace graph_space(std::vector<std::string> vertices, const std::vector<std::tuple<int, int, std::string>>& edges) {
  WeightedGraph g{std::move(vertices), {}};
  for (const auto& [u, v, w] : edges) g.edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), parse_rational(w)});
  return shortest_path_metric(g);
}

MetricSpace path3() { return graph_space({"A", "B", "C"}, {{0, 1, "1"}, {1, 2, "2"}}); }
MetricSpace unit_path3() { return graph_space({"A", "B", "C"}, {{0, 1, "1"}, {1, 2, "1"}}); }
MetricSpace c4() { return graph_space({"c1", "c2", "c3", "c4"}, {{0, 1, "1"}, {1, 2, "1"}, {2, 3, "1"}, {3, 0, "1"}}); }

MetricSpace k4_strict() {
  return make_space({"A", "B", "C", "D"}, {{"0", "1", "5/4", "3/2"}, {"1", "0", "3/2", "5/4"}, {"5/4", "3/2", "0", "1"}, {"3/2", "5/4", "1", "0"}});
}

MetricSpace four_point_nonunique() {
  return graph_space({"A", "B", "C", "D"}, {{2, 0, "1"}, {0, 1, "1"}, {1, 3, "1"}});
}

MetricSpace star(int leaves) {
  std::vector<std::string> names{"center"};
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 1; i <= leaves; ++i) {
    names.push_back("leaf" + std::to_string(i));
    edges.emplace_back(0, i, "1");
  }
  return graph_space(std::move(names), edges);
}

MetricSpace tree5() {
  return graph_space({"r", "x", "y", "z", "w"}, {{0, 1, "1/2"}, {0, 2, "2"}, {2, 3, "1"}, {2, 4, "3/2"}});
}

std::vector<NamedSpace> corpus() {
  std::vector<NamedSpace> out{
      {"path3", path3()},
      {"unit_path3", unit_path3()},
      {"C4", c4()},
      {"K4_strict", k4_strict()},
      {"four_point_nonunique", four_point_nonunique()},
      {"star4", star(4)},
      {"tree5", tree5()},
      {"K23", complete_bipartite(2, 3).space()},
      {"C5", cycle(5).space()},
      {"C6", cycle(6).space()},
      {"grid3", grid(3).space()},
      {"K24", complete_bipartite(2, 4).space()},
      {"weighted_mix", graph_space({"p", "q", "r", "s", "t"},
                                   {{0, 1, "1"}, {1, 2, "1"}, {0, 2, "2"}, {2, 3, "3/2"}, {3, 4, "1/2"}, {4, 0, "5/2"}, {1, 3, "2"}})},
  };
  Rng rng(20240611);
  for (int i = 0; i < 6; ++i) out.push_back({"random_rational_" + std::to_string(i), random_rational_metric(rng, 4 + static_cast<std::size_t>(i % 3))});
  for (int i = 0; i < 6; ++i) out.push_back({"random_graph_" + std::to_string(i), random_graph_metric(rng, 4 + static_cast<std::size_t>(i % 3))});
  return out;
}

std::vector<NamedSpace> corpus_up_to(std::size_t max_points) {
  std::vector<NamedSpace> out;
  for (auto& s : corpus())
    if (s.space.size() <= max_points) out.push_back(std::move(s));
  return out;
}

std::vector<TransportationProblem> problems_for(const MetricSpace& space, std::size_t random_count, std::uint64_t seed) {
  std::vector<TransportationProblem> out;
  for (std::size_t u = 0; u < space.size(); ++u)
    for (std::size_t v = u + 1; v < space.size(); ++v) out.push_back(TransportationProblem::dipole(space.size(), u, v));
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(random_problem(rng, space.size()));
  return out;
}

TransportationProblem problem(const MetricSpace& space, const std::vector<std::pair<std::string, std::string>>& values) {
  VertexVector f = VertexVector::Zero(static_cast<Eigen::Index>(space.size()));
  for (const auto& [name, value] : values) f(static_cast<Eigen::Index>(*space.index_of(name))) = parse_rational(value);
  return TransportationProblem(std::move(f));
}

LipschitzFunction random_lipschitz(Rng& rng, const CanonicalGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.num_vertices());
  std::uniform_int_distribution<int> value(-12, 12);
  std::uniform_int_distribution<int> shrink(1, 4);
  VertexVector l(n);
  for (Eigen::Index v = 0; v < n; ++v) l(v) = value(rng);
  l.array() -= l(static_cast<Eigen::Index>(graph.space().base()));
  Rational ratio = 0;
  for (const auto& e : graph.edges()) {
    Rational r = abs_value(l(static_cast<Eigen::Index>(e.tail)) - l(static_cast<Eigen::Index>(e.head))) / e.weight;
    if (r > ratio) ratio = r;
  }
  if (ratio != 0) {
    const int factor = shrink(rng);
    l /= ratio;
    // Keep exactly tight functions common: factor 1 or 2 leaves them unscaled.
    if (factor > 2) l *= Rational(factor - 1, factor);
  }
  return LipschitzFunction(std::move(l));
}

}  // namespace tcspace::testing
