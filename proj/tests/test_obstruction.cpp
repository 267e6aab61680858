#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/corpus.hpp"
#include "support/probe.hpp"
#include "tcspace/obstruction.hpp"

using namespace tcspace;
namespace tt = tcspace::testing;

namespace {

TransportationProblem vec(std::initializer_list<int> values) {
  VertexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (int x : values) v(i++) = x;
  return TransportationProblem(std::move(v));
}

ErrorCode error_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

// Images of the unit vectors of the 3-dimensional max-norm space in TC(C4).
LinftyCandidate c4_cube(const CanonicalGraph& g) {
  return normalized_candidate(g, {vec({1, 0, -1, 0}), vec({0, 1, 0, -1}), vec({1, -1, 1, -1})});
}

}  // namespace

TEST_CASE("normalization and combinations") {
  auto g = canonical_graph(tt::c4());
  auto cand = c4_cube(g);
  REQUIRE(cand.k() == 3);
  CHECK(cand.vectors[0].values()(0) == Rational(1, 2));
  CHECK(combination(cand, {1, 1, 1}) == vec({1, 0, 0, -1}));
  CHECK(error_of([&] { normalized_candidate(g, {TransportationProblem::zero(4)}); }) == ErrorCode::NullProblem);
}

TEST_CASE("strong disjointness on C4") {
  auto g = canonical_graph(tt::c4());
  CHECK(strongly_disjoint(g, vec({1, -1, 0, 0}), vec({0, 0, 1, -1})));
  CHECK_FALSE(strongly_disjoint(g, vec({1, 0, -1, 0}), vec({0, 1, 0, -1})));
  CHECK_FALSE(strongly_disjoint(g, vec({1, -1, 0, 0}), vec({2, -2, 0, 0})));
  CHECK(error_of([&] { strongly_disjoint(g, vec({1, -1, 0, 0}), TransportationProblem::zero(4)); }) == ErrorCode::NullProblem);
}

TEST_CASE("C4 carries the three-dimensional cube") {
  auto g = canonical_graph(tt::c4());
  auto cand = c4_cube(g);
  auto v = verify_linfty_basis(g, cand);
  CHECK(v.sign_vectors_ok);
  CHECK(v.grid_ok);
  CHECK(v.passed());
  auto pattern = check_sign_pattern_disjointness(g, cand);
  CHECK(pattern.passed);
  CHECK(pattern.pairs_checked > 0);
  for (std::size_t j = 0; j < 3; ++j) {
    CAPTURE(j);
    auto roadmaps = count_disjoint_roadmaps(g, cand, j);
    CHECK(roadmaps.roadmaps.size() == 2);
    CHECK(roadmaps.count() >= 2);
    for (const auto& p : roadmaps.roadmaps) {
      CHECK(apply_incidence(g, p) == cand.vectors[j].values());
      CHECK(l1d_norm(g, p) == 1);
    }
  }
}

TEST_CASE("a non-basis is rejected with a counterexample") {
  auto g = canonical_graph(tt::c4());
  auto cand = normalized_candidate(g, {vec({1, -1, 0, 0}), vec({1, 0, -1, 0})});
  auto v = verify_linfty_basis(g, cand);
  CHECK_FALSE(v.passed());
  CHECK_FALSE(v.counterexample.empty());
  CHECK(error_of([&] { verify_linfty_basis(g, cand, 1); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([&] { count_disjoint_roadmaps(g, cand, 0); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("bounded search rediscovers a cube in C4") {
  auto g = canonical_graph(tt::c4());
  auto found = tt::find_linfty_basis(g, 3, {-1, 0, 1});
  REQUIRE(found);
  CHECK(verify_linfty_basis(g, *found).passed());
  CHECK_FALSE(tt::find_linfty_basis(g, 4, {-1, 0, 1}));
}

TEST_CASE("degree certificates") {
  auto grid4 = grid(4).canonical();
  auto five = certify_no_linfty(grid4, 5);
  CHECK(five.verdict == Verdict::RuledOut);
  CHECK(five.threshold == 8);
  CHECK(five.max_degree == 4);
  CHECK(five.degree_histogram == std::map<std::size_t, std::size_t>{{2, 4}, {3, 8}, {4, 4}});
  CHECK(certify_no_linfty(grid4, 4).verdict == Verdict::Inconclusive);
  CHECK(certify_no_linfty(grid4, 3).verdict == Verdict::Inconclusive);
  CHECK(error_of([&] { certify_no_linfty(grid4, 2); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([&] { certify_no_linfty(grid4, 5, grid(4).descriptor); }) == ErrorCode::PeelNotApplicable);
  CHECK(verdict_name(Verdict::RuledOut) == "ruled_out");
  CHECK(verdict_name(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("peeling diamonds") {
  auto d2 = diamond(2);
  auto g = d2.canonical();
  CHECK(certify_no_linfty(g, 4).verdict == Verdict::Inconclusive);
  auto peeled = certify_no_linfty(g, 4, d2.descriptor);
  CHECK(peeled.verdict == Verdict::RuledOut);
  CHECK(peeled.peeling == std::vector<std::string>{"D_2", "D_1"});
  auto sharp = certify_no_linfty(g, 3, d2.descriptor);
  CHECK(sharp.verdict == Verdict::Inconclusive);
  CHECK(sharp.peeling == std::vector<std::string>{"D_2"});
  // The descriptor must describe the graph it is paired with.
  CHECK(error_of([&] { certify_no_linfty(diamond(1).canonical(), 4, d2.descriptor); }) == ErrorCode::PeelNotApplicable);
}

TEST_CASE("peeling K23 compositions") {
  auto b2 = recursive_family(k23_two_port(), 2);
  auto g = b2.canonical();
  auto four = certify_no_linfty(g, 4, b2.descriptor);
  CHECK(four.verdict == Verdict::RuledOut);
  CHECK(four.peeling == std::vector<std::string>{"B_2", "B_1"});
  CHECK(certify_no_linfty(g, 3, b2.descriptor).verdict == Verdict::Inconclusive);
}

TEST_CASE("certificates are monotone in k") {
  std::vector<CanonicalGraph> graphs{grid(3).canonical(), diamond(2).canonical(), complete_bipartite(2, 4).canonical(),
                                     canonical_graph(tt::star(5))};
  for (const auto& g : graphs) {
    bool ruled_out = false;
    for (int k = 3; k <= 8; ++k) {
      const bool now = certify_no_linfty(g, k).verdict == Verdict::RuledOut;
      CHECK((!ruled_out || now));
      ruled_out = now;
    }
    CHECK(ruled_out);
  }
  auto d3 = diamond(3);
  auto g = d3.canonical();
  bool ruled_out = false;
  for (int k = 3; k <= 7; ++k) {
    const bool now = certify_no_linfty(g, k, d3.descriptor).verdict == Verdict::RuledOut;
    CHECK((!ruled_out || now));
    ruled_out = now;
  }
}

TEST_CASE("ruled-out spaces admit no small basis") {
  std::size_t searched = 0;
  for (const auto& [name, space] : tt::corpus_up_to(6)) {
    CAPTURE(name);
    auto g = canonical_graph(space);
    for (int k = 3; k <= 4; ++k) {
      if (certify_no_linfty(g, k).verdict != Verdict::RuledOut) continue;
      CHECK_FALSE(tt::find_linfty_basis(g, static_cast<std::size_t>(k), {-1, 0, 1}));
      ++searched;
    }
  }
  CHECK(searched > 0);
}
