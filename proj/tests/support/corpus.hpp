#pragma once

#include <string>
#include <vector>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/duality.hpp"
#include "tcspace/oracle.hpp"
#include "tcspace/problem.hpp"

namespace tcspace::testing {

struct NamedSpace {
  std::string name;
  MetricSpace space;
};

MetricSpace make_space(std::vector<std::string> points, const std::vector<std::vector<std::string>>& dist);
MetricSpace graph_space(std::vector<std::string> vertices, const std::vector<std::tuple<int, int, std::string>>& edges);

/// A - B - C with w(AB) = 1, w(BC) = 2.
MetricSpace path3();
/// A - B - C with unit edges.
MetricSpace unit_path3();
/// Unit 4-cycle c1 c2 c3 c4.
MetricSpace c4();
/// Four points, all triangle inequalities strict.
MetricSpace k4_strict();
/// Path C - A - B - D with unit edges; f = 1_A - 1_B has T_f = {AB}.
MetricSpace four_point_nonunique();
/// Unit star, center first.
MetricSpace star(int leaves);
/// Five-vertex weighted tree.
MetricSpace tree5();

/// Hand-built instances plus small family members; at most 9 points each.
std::vector<NamedSpace> corpus();
/// Corpus members with at most `max_points` points.
std::vector<NamedSpace> corpus_up_to(std::size_t max_points);

/// Every dipole 1_u - 1_v (u < v) followed by `random_count` seeded random problems.
std::vector<TransportationProblem> problems_for(const MetricSpace& space, std::size_t random_count, std::uint64_t seed);

TransportationProblem problem(const MetricSpace& space, const std::vector<std::pair<std::string, std::string>>& values);

/// Random 1-Lipschitz function vanishing at the base point: random values
/// rescaled by their worst edge ratio, then shrunk by a random factor in (0, 1].
LipschitzFunction random_lipschitz(Rng& rng, const CanonicalGraph& graph);

}  // namespace tcspace::testing
