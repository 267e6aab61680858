#pragma once

#include <cstdint>
#include <optional>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/obstruction.hpp"
#include "tcspace/problem.hpp"

namespace tcspace::testing {

/// Independent uniqueness test for supporting functions: restrict the
/// all-pairs Lipschitz polytope to the face {l(f) >= oracle norm} and compare
/// the maximum and minimum of two generic linear objectives over it. The
/// face is a single point iff both spreads are zero.
bool probe_unique_supporting(const MetricSpace& space, const TransportationProblem& f, std::uint64_t seed);

/// Zero-sum vectors with entries from `entries`, one representative per ±
/// pair, in lexicographic order of their entry indices.
std::vector<TransportationProblem> small_problems(std::size_t n, const std::vector<long>& entries);

/// Bounded exhaustive search for k normalized problems whose ±1
/// combinations all have norm 1 and which pass verify_linfty_basis.
std::optional<LinftyCandidate> find_linfty_basis(const CanonicalGraph& graph, std::size_t k, const std::vector<long>& entries);

}  // namespace tcspace::testing
