#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/corpus.hpp"
#include "tcspace/canonical_graph.hpp"
#include "tcspace/error.hpp"
#include "tcspace/oracle.hpp"

using namespace tcspace;
using tcspace::testing::make_space;

namespace {

ErrorCode violation_of(std::vector<std::string> points, const std::vector<std::vector<std::string>>& dist) {
  try {
    make_space(std::move(points), dist);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("metric was accepted");
  return ErrorCode::InvalidInput;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const CanonicalGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.tail, e.head);
  return out;
}

}  // namespace

TEST_CASE("rationals parse exactly and print in lowest terms") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(parse_rational("2e3") == Rational(2000));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("08/010") == Rational(4, 5));
  CHECK(parse_rational("0.075") == Rational(3, 40));
  CHECK(to_string(parse_rational("5/2")) == "5/2");
  for (const char* bad : {"", "1/0", "abc", "1/-2", "1.2.3", "--1", "1e", "e5", "1/2/3"})
    CHECK_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("validate_metric accepts the equality case and reports violations") {
  auto line = make_space({"A", "B", "C"}, {{"0", "1", "2"}, {"1", "0", "1"}, {"2", "1", "0"}});
  CHECK(line.size() == 3);

  try {
    make_space({"A", "B", "C"}, {{"0", "1", "3"}, {"1", "0", "1"}, {"3", "1", "0"}});
    FAIL("triangle violation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TriangleViolation);
    CHECK(e.indices() == std::vector<std::size_t>{0, 1, 2});
  }

  auto two = make_space({"P", "Q"}, {{"0", "5/2"}, {"5/2", "0"}});
  CHECK(two.dist(0, 1) == Rational(5, 2));

  CHECK(violation_of({"A", "B"}, {{"0", "1"}, {"2", "0"}}) == ErrorCode::NonSymmetric);
  CHECK(violation_of({"A", "B"}, {{"0", "-1"}, {"-1", "0"}}) == ErrorCode::NegativeDistance);
  CHECK(violation_of({"A", "B"}, {{"0", "0"}, {"0", "0"}}) == ErrorCode::ZeroDistanceDistinctPoints);
}

TEST_CASE("canonical graph deletes pairs realized through a third point") {
  auto line = make_space({"A", "B", "C"}, {{"0", "1", "2"}, {"1", "0", "1"}, {"2", "1", "0"}});
  auto g = canonical_graph(line);
  CHECK(edge_pairs(g) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

  auto cycle = canonical_graph(tcspace::testing::c4());
  CHECK(edge_pairs(cycle) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  auto strict = canonical_graph(tcspace::testing::k4_strict());
  CHECK(strict.num_edges() == 6);

  auto pair = canonical_graph(make_space({"P", "Q"}, {{"0", "5/2"}, {"5/2", "0"}}));
  CHECK(pair.num_edges() == 1);
  CHECK(pair.edge(0).weight == Rational(5, 2));
}

TEST_CASE("canonical graph invariants on the corpus and random metrics") {
  auto spaces = tcspace::testing::corpus();
  Rng rng(11);
  for (int i = 0; i < 30; ++i) spaces.push_back({"r", i % 2 ? random_rational_metric(rng, 6) : random_graph_metric(rng, 7)});
  for (const auto& [name, space] : spaces) {
    CAPTURE(name);
    auto g = canonical_graph(space);
    CHECK(is_connected(g));
    CHECK(path_metric(g) == space.distances());
    for (const auto& e : g.edges()) {
      CHECK(e.tail < e.head);
      CHECK(e.weight == space.dist(e.tail, e.head));
    }
    // Idempotent: rebuilding from the graph's own path metric.
    auto again = canonical_graph(detail::trusted_metric(space.points(), path_metric(g), space.base()));
    CHECK(edge_pairs(again) == edge_pairs(g));
    // Sparse route agrees with the dense construction.
    WeightedGraph as_graph{space.points(), {}};
    for (const auto& e : g.edges()) as_graph.edges.push_back({e.tail, e.head, e.weight});
    CHECK(edge_pairs(canonical_graph(as_graph)) == edge_pairs(g));
  }
}

TEST_CASE("weighted-graph input may lose edges that are not geodesics") {
  WeightedGraph g{{"A", "B", "C"}, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(5)}}};
  auto canon = canonical_graph(g);
  CHECK(edge_pairs(canon) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(canon.space().dist(0, 2) == 2);
}

TEST_CASE("l1d norm") {
  auto pair = canonical_graph(make_space({"P", "Q"}, {{"0", "1/2"}, {"1/2", "0"}}));
  EdgeVector p(1);
  p << Rational(-3);
  CHECK(l1d_norm(pair, p) == Rational(3, 2));
  CHECK(l1d_norm(pair, EdgeVector::Zero(1)) == 0);

  auto path = canonical_graph(tcspace::testing::path3());
  EdgeVector q(2);
  q << Rational(1), Rational(-2);
  CHECK(l1d_norm(path, q) == 5);
}

TEST_CASE("incidence operator") {
  auto g = canonical_graph(tcspace::testing::c4());
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    EdgeVector p = EdgeVector::Zero(static_cast<Eigen::Index>(g.num_edges()));
    p(static_cast<Eigen::Index>(k)) = 1;
    VertexVector expected = VertexVector::Zero(n);
    expected(static_cast<Eigen::Index>(g.edge(k).tail)) = 1;
    expected(static_cast<Eigen::Index>(g.edge(k).head)) = -1;
    CHECK(apply_incidence(g, p) == expected);
  }
  CHECK(apply_incidence(g, EdgeVector::Zero(4)).isZero());

  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto space = random_graph_metric(rng, 6);
    auto h = canonical_graph(space);
    const auto m = h.num_edges();
    EdgeVector p = random_edge_vector(rng, m), q = random_edge_vector(rng, m);
    const Rational a(3, 7), b(-2);
    CHECK(apply_incidence(h, a * p + b * q) == a * apply_incidence(h, p) + b * apply_incidence(h, q));
    CHECK(apply_incidence(h, p).sum() == 0);
    CHECK(apply_incidence(h, p) == -(incidence_matrix(h) * p));
  }
}

TEST_CASE("dot export lists every edge with its weight") {
  auto dot = to_dot(canonical_graph(tcspace::testing::path3()));
  CHECK(dot.find("\"A\" -> \"B\" [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("\"B\" -> \"C\" [label=\"2\"]") != std::string::npos);
}
