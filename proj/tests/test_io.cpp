#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/corpus.hpp"
#include "tcspace/io.hpp"

using namespace tcspace;
namespace tt = tcspace::testing;
using tcspace::io::Json;

TEST_CASE("rationals in json") {
  CHECK(io::rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK(io::rational_from_json(Json(3)) == 3);
  CHECK(io::rational_to_json(Rational(3, 2)) == Json("3/2"));
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), Error);
  CHECK_THROWS_AS(io::rational_from_json(Json::array()), Error);
}

TEST_CASE("space documents round-trip") {
  for (const auto& [name, space] : tt::corpus()) {
    CAPTURE(name);
    auto doc = io::space_to_json(space);
    CHECK(io::space_from_json(doc).space == space);
    CHECK(io::space_to_json(io::space_from_json(doc).space) == doc);
  }
  auto g = Json::parse(R"({"vertices":["A","B","C"],"edges":[{"u":"A","v":"B","w":"1"},{"u":"B","v":"C","w":"1/2"}],"base":"B"})");
  auto doc = io::space_from_json(g);
  CHECK(doc.space.base() == 1);
  CHECK(doc.space.dist(0, 2) == Rational(3, 2));
  CHECK(doc.graph);
  CHECK(doc.canonical().num_edges() == 2);

  CHECK_THROWS_AS(io::space_from_json(Json::parse(R"({"points":["A"]})")), Error);
  CHECK_THROWS_AS(io::space_from_json(Json::parse(R"({"points":["A","B"],"dist":[["0","1"],["2","0"]]})")), Error);
}

TEST_CASE("problems, roadmaps, functions and digraphs round-trip") {
  auto space = tt::c4();
  auto g = canonical_graph(space);
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    auto f = random_problem(rng, 4);
    CHECK(io::problem_from_json(space, io::problem_to_json(space, f)) == f);
    auto sol = tc_norm(g, f);
    CHECK(io::roadmap_from_json(g, io::roadmap_to_json(g, sol.roadmap, true)) == sol.roadmap);
    auto l = supporting_function(g, f);
    CHECK(io::lipschitz_from_json(space, io::lipschitz_to_json(space, l)) == l);
    if (!f.is_zero()) {
      auto h = directed_graph_of(g, f);
      CHECK(io::digraph_from_json(g, io::digraph_to_json(g, h)) == h);
    }
  }
  auto basis = cycle_basis(g);
  auto doc = io::cycle_basis_to_json(g, basis);
  REQUIRE(doc.contains("cycles"));
  auto cyc = io::cycle_from_json(g, doc["cycles"][0]);
  CHECK(cyc.vertices == basis.cycles[0].vertices);
  CHECK_THROWS_AS(io::problem_from_json(space, Json::parse(R"({"f":{"c1":"1","c2":"-2"}})")), Error);
  CHECK_THROWS_AS(io::problem_from_json(space, Json::parse(R"({"f":{"nowhere":"1"}})")), Error);
}

TEST_CASE("family descriptors and two-port graphs round-trip") {
  auto d = diamond(2);
  CHECK(io::descriptor_from_json(io::descriptor_to_json(d.descriptor)) == d.descriptor);
  auto k = recursive_family(k23_two_port(), 1);
  CHECK(io::descriptor_from_json(io::descriptor_to_json(k.descriptor)) == k.descriptor);
  CHECK(io::two_port_from_json(io::two_port_to_json(k23_two_port())) == k23_two_port());
}

TEST_CASE("errors serialize with their kind") {
  auto j = io::error_to_json(Error(ErrorCode::TriangleViolation, "bad", {0, 1, 2}));
  CHECK(j["error"] == "TriangleViolation");
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), Error);
}
