#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/families.hpp"
#include "tcspace/problem.hpp"
#include "tcspace/solver.hpp"

namespace tcspace {

/// Candidate images e_1..e_k of the unit vector basis of ℓ∞^k.
struct LinftyCandidate {
  std::vector<TransportationProblem> vectors;

  std::size_t k() const { return vectors.size(); }
};

/// Divides every vector by its transportation cost norm. Throws NullProblem
/// for a zero vector.
LinftyCandidate normalized_candidate(const CanonicalGraph& graph, std::vector<TransportationProblem> vectors);

/// Σ θ_i e_i for a coefficient vector θ.
TransportationProblem combination(const LinftyCandidate& cand, const std::vector<Rational>& coefficients);

/// T_f ∩ T_g = ∅. Throws NullProblem if either problem is zero.
bool strongly_disjoint(const CanonicalGraph& graph, const TransportationProblem& f, const TransportationProblem& g);

struct SignPatternReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  /// First pair of sign vectors whose combinations are not strongly disjoint
  /// (or one of which is zero).
  std::optional<std::pair<std::vector<int>, std::vector<int>>> failure;
};

/// Every two ±1 combinations that agree in some coordinate and differ in
/// another must be strongly disjoint.
SignPatternReport check_sign_pattern_disjointness(const CanonicalGraph& graph, const LinftyCandidate& cand);

struct BasisVerification {
  bool sign_vectors_ok = false;
  bool grid_ok = false;
  /// First failing coefficient vector.
  std::vector<Rational> counterexample;

  bool passed() const { return sign_vectors_ok && grid_ok; }
};

/// Exact: ‖Σ θ_i e_i‖ = 1 for all 2^k sign vectors. Grid: ‖Σ a_i e_i‖ =
/// max |a_i| for every a with entries -1 + 2j/(r-1), j = 0..r-1.
/// Throws PreconditionFailed for k < 2 or r < 2.
BasisVerification verify_linfty_basis(const CanonicalGraph& graph, const LinftyCandidate& cand, int grid_resolution = 5);

struct DisjointRoadmaps {
  /// One roadmap for e_j per sign tuple of the remaining k-2 coordinates.
  std::vector<Roadmap> roadmaps;
  /// Indices into `roadmaps` of a largest pairwise-disjoint subset.
  std::vector<std::size_t> disjoint;

  std::size_t count() const { return disjoint.size(); }
};

/// For coordinate j (0-based) builds (p(θ, θ_j = 1) - p(θ, θ_j = -1)) / 2
/// from optimal roadmaps of the sign combinations, with one other coordinate
/// pinned at +1, and checks each is optimal for e_j. Throws
/// PreconditionFailed if some sign-vector norm differs from 1 or a
/// constructed roadmap is not optimal.
DisjointRoadmaps count_disjoint_roadmaps(const CanonicalGraph& graph, const LinftyCandidate& cand, std::size_t j);

enum class Verdict { RuledOut, Inconclusive };

struct Certificate {
  int k = 0;
  Verdict verdict = Verdict::Inconclusive;
  unsigned long long threshold = 0;  // 2^(k-2)
  std::size_t max_degree = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  /// Levels examined while peeling, outermost first.
  std::vector<std::string> peeling;
};

/// RuledOut iff no canonical-graph vertex has degree >= 2^(k-2).
/// Throws PreconditionFailed for k < 3.
Certificate certify_no_linfty(const CanonicalGraph& graph, int k);

/// Peeled certificate for a recursive family: while every vertex of degree
/// >= 2^(k-2) belongs to the previous level, restrict to that level; rule out
/// ℓ∞^k when a level has no such vertex. `graph` must be the level named by
/// the descriptor; throws PeelNotApplicable otherwise or for non-recursive
/// families.
Certificate certify_no_linfty(const CanonicalGraph& graph, int k, const FamilyDescriptor& family);

std::string_view verdict_name(Verdict verdict);

}  // namespace tcspace
