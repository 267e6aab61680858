#include "tcspace/obstruction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tcspace {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<int> sign_vector(std::size_t k, std::size_t mask) {
  std::vector<int> theta(k);
  for (std::size_t i = 0; i < k; ++i) theta[i] = (mask >> i & 1U) ? -1 : 1;
  return theta;
}

TransportationProblem signed_sum(const LinftyCandidate& cand, const std::vector<int>& theta) {
  std::vector<Rational> coefficients(theta.begin(), theta.end());
  return combination(cand, coefficients);
}

bool disjoint_signs(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t e = 0; e < a.size(); ++e)
    if (a[e] != 0 && b[e] != 0) return false;
  return true;
}

bool disjoint_vectors(const Roadmap& a, const Roadmap& b) {
  for (Eigen::Index e = 0; e < a.size(); ++e)
    if (a(e) != 0 && b(e) != 0) return false;
  return true;
}

void require_k(const LinftyCandidate& cand, std::size_t min_k) {
  if (cand.k() < min_k) throw Error(ErrorCode::PreconditionFailed, "candidate needs at least " + std::to_string(min_k) + " vectors");
  if (cand.k() > 20) throw Error(ErrorCode::PreconditionFailed, "candidate is too large for sign enumeration");
}

unsigned long long degree_threshold(int k) { return k - 2 >= 63 ? ~0ULL : 1ULL << (k - 2); }

void fill_degrees(const CanonicalGraph& graph, Certificate& cert) {
  cert.max_degree = graph.max_degree();
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) ++cert.degree_histogram[graph.degree(v)];
}

std::vector<std::size_t> high_degree(const CanonicalGraph& graph, unsigned long long threshold) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v)
    if (graph.degree(v) >= threshold) out.push_back(v);
  return out;
}

}  // namespace

LinftyCandidate normalized_candidate(const CanonicalGraph& graph, std::vector<TransportationProblem> vectors) {
  LinftyCandidate cand;
  for (auto& f : vectors) {
    if (f.is_zero()) throw Error(ErrorCode::NullProblem, "candidate vectors must be nonzero");
    const Rational norm = tc_norm(graph, f).norm;
    cand.vectors.push_back(Rational(1 / norm) * f);
  }
  return cand;
}

TransportationProblem combination(const LinftyCandidate& cand, const std::vector<Rational>& coefficients) {
  if (coefficients.size() != cand.k() || cand.k() == 0) throw Error(ErrorCode::InvalidInput, "coefficient count mismatch");
  VertexVector sum = VertexVector::Zero(ix(cand.vectors.front().size()));
  for (std::size_t i = 0; i < cand.k(); ++i)
    if (coefficients[i] != 0) sum += coefficients[i] * cand.vectors[i].values();
  return TransportationProblem(std::move(sum));
}

bool strongly_disjoint(const CanonicalGraph& graph, const TransportationProblem& f, const TransportationProblem& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::NullProblem, "strong disjointness needs nonzero problems");
  return disjoint_signs(maximal_support(graph, f).sign, maximal_support(graph, g).sign);
}

SignPatternReport check_sign_pattern_disjointness(const CanonicalGraph& graph, const LinftyCandidate& cand) {
  require_k(cand, 2);
  const std::size_t k = cand.k();
  const std::size_t total = std::size_t{1} << k;
  std::vector<std::optional<std::vector<int>>> support(total);  // nullopt: zero combination
  for (std::size_t mask = 0; mask < total; ++mask) {
    TransportationProblem f = signed_sum(cand, sign_vector(k, mask));
    if (!f.is_zero()) support[mask] = maximal_support(graph, f).sign;
  }

  SignPatternReport report;
  const std::size_t all = total - 1;
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b) {
      // Agree somewhere and differ somewhere: neither equal nor opposite.
      if ((a ^ b) == all) continue;
      ++report.pairs_checked;
      if (support[a] && support[b] && disjoint_signs(*support[a], *support[b])) continue;
      report.passed = false;
      report.failure = {sign_vector(k, a), sign_vector(k, b)};
      return report;
    }
  return report;
}

BasisVerification verify_linfty_basis(const CanonicalGraph& graph, const LinftyCandidate& cand, int grid_resolution) {
  require_k(cand, 2);
  if (grid_resolution < 2) throw Error(ErrorCode::PreconditionFailed, "grid resolution must be at least 2");
  const std::size_t k = cand.k();
  BasisVerification out;

  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    const auto theta = sign_vector(k, mask);
    if (tc_norm(graph, signed_sum(cand, theta)).norm != 1) {
      out.counterexample.assign(theta.begin(), theta.end());
      return out;
    }
  }
  out.sign_vectors_ok = true;

  const auto r = static_cast<std::size_t>(grid_resolution);
  std::vector<Rational> levels;
  for (std::size_t j = 0; j < r; ++j) levels.push_back(Rational(-1) + Rational(static_cast<long>(2 * j), static_cast<long>(r - 1)));
  std::vector<std::size_t> digit(k, 0);
  for (;;) {
    std::vector<Rational> a(k);
    Rational largest = 0;
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = levels[digit[i]];
      largest = std::max(largest, abs_value(a[i]));
    }
    if (tc_norm(graph, combination(cand, a)).norm != largest) {
      out.counterexample = std::move(a);
      return out;
    }
    std::size_t i = 0;
    while (i < k && ++digit[i] == r) digit[i++] = 0;
    if (i == k) break;
  }
  out.grid_ok = true;
  return out;
}

DisjointRoadmaps count_disjoint_roadmaps(const CanonicalGraph& graph, const LinftyCandidate& cand, std::size_t j) {
  require_k(cand, 2);
  const std::size_t k = cand.k();
  if (j >= k) throw Error(ErrorCode::InvalidInput, "coordinate index out of range");
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask)
    if (tc_norm(graph, signed_sum(cand, sign_vector(k, mask))).norm != 1)
      throw Error(ErrorCode::PreconditionFailed, "a sign combination does not have norm 1");

  const std::size_t pivot = j == 0 ? 1 : 0;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < k; ++i)
    if (i != j && i != pivot) free.push_back(i);
  const Rational target = tc_norm(graph, cand.vectors[j]).norm;

  DisjointRoadmaps out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    std::vector<int> theta(k, 1);
    for (std::size_t t = 0; t < free.size(); ++t) theta[free[t]] = (mask >> t & 1U) ? -1 : 1;
    theta[j] = 1;
    const Roadmap plus = tc_norm(graph, signed_sum(cand, theta)).roadmap;
    theta[j] = -1;
    const Roadmap minus = tc_norm(graph, signed_sum(cand, theta)).roadmap;
    Roadmap half = (plus - minus) / Rational(2);
    if (apply_incidence(graph, half) != cand.vectors[j].values() || l1d_norm(graph, half) != target)
      throw Error(ErrorCode::PreconditionFailed, "constructed roadmap is not optimal for e_j");
    out.roadmaps.push_back(std::move(half));
  }

  // Largest pairwise-disjoint subset, by exhaustive search.
  const std::size_t m = out.roadmaps.size();
  if (m > 20) throw Error(ErrorCode::PreconditionFailed, "too many roadmaps for exhaustive search");
  std::vector<std::vector<bool>> clash(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) clash[a][b] = clash[b][a] = !disjoint_vectors(out.roadmaps[a], out.roadmaps[b]);
  std::size_t best_mask = 0;
  for (std::size_t subset = 1; subset < (std::size_t{1} << m); ++subset) {
    if (std::popcount(subset) <= std::popcount(best_mask)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = a + 1; b < m && ok; ++b)
        ok = !((subset >> a & 1U) && (subset >> b & 1U) && clash[a][b]);
    if (ok) best_mask = subset;
  }
  for (std::size_t a = 0; a < m; ++a)
    if (best_mask >> a & 1U) out.disjoint.push_back(a);
  return out;
}

Certificate certify_no_linfty(const CanonicalGraph& graph, int k) {
  if (k < 3) throw Error(ErrorCode::PreconditionFailed, "certificates need k >= 3 (every space with 4 points contains ℓ∞^2)");
  Certificate cert;
  cert.k = k;
  cert.threshold = degree_threshold(k);
  fill_degrees(graph, cert);
  cert.verdict = cert.max_degree < cert.threshold ? Verdict::RuledOut : Verdict::Inconclusive;
  return cert;
}

Certificate certify_no_linfty(const CanonicalGraph& graph, int k, const FamilyDescriptor& family) {
  Certificate cert = certify_no_linfty(graph, k);
  if (!family.recursive || !family.base)
    throw Error(ErrorCode::PeelNotApplicable, "peeling needs a recursive family declaration");
  const auto n_param = family.param("n");
  if (!n_param || *n_param < 0) throw Error(ErrorCode::PeelNotApplicable, "family declaration lacks its level n");
  const int n = static_cast<int>(*n_param);
  const std::vector<Family> levels = family_levels(family, n);
  if (levels.back().graph.vertices != graph.space().points() ||
      levels.back().descriptor.generation.size() != graph.num_vertices())
    throw Error(ErrorCode::PeelNotApplicable, "graph is not the declared family member " + family.level_name(n));
  const std::vector<int>& generation = levels.back().descriptor.generation;

  cert.verdict = Verdict::Inconclusive;
  for (int m = n; m >= 0; --m) {
    cert.peeling.push_back(family.level_name(m));
    const CanonicalGraph level = m == n ? graph : levels[static_cast<std::size_t>(m)].canonical();
    const auto& names = level.space().points();
    if (!std::equal(names.begin(), names.end(), graph.space().points().begin()))
      throw std::logic_error("family levels are not nested");
    const auto high = high_degree(level, cert.threshold);
    if (high.empty()) {
      cert.verdict = Verdict::RuledOut;
      break;
    }
    // The bottom level is the base graph itself; nothing further to peel.
    if (m <= 1) break;
    if (std::any_of(high.begin(), high.end(), [&](std::size_t v) { return generation[v] >= m; })) break;
  }
  return cert;
}

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::RuledOut ? "ruled_out" : "inconclusive";
}

}  // namespace tcspace
