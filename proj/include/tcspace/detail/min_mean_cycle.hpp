#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tcspace::detail {

template <class Scalar>
struct CostArc {
  std::size_t from = 0;
  std::size_t to = 0;
  Scalar cost{};
};

template <class Scalar>
struct MeanCycle {
  Scalar mean{};
  std::vector<std::size_t> arcs;  // indices into the arc list, in traversal order
};

/// Minimum mean directed cycle (Karp). The cycle itself is recovered by
/// shifting costs by -mean, computing feasible potentials with Bellman-Ford
/// and searching the subgraph of tight arcs, where every cycle has mean
/// exactly `mean`. Returns nullopt when the digraph is acyclic.
template <class Scalar>
std::optional<MeanCycle<Scalar>> minimum_mean_cycle(std::size_t n, const std::vector<CostArc<Scalar>>& arcs) {
  if (n == 0) return std::nullopt;

  // walk[k][v]: cheapest walk with exactly k arcs ending at v, from anywhere.
  std::vector<std::vector<std::optional<Scalar>>> walk(n + 1, std::vector<std::optional<Scalar>>(n));
  for (std::size_t v = 0; v < n; ++v) walk[0][v] = Scalar(0);
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& a : arcs) {
      if (!walk[k - 1][a.from]) continue;
      Scalar candidate = *walk[k - 1][a.from] + a.cost;
      auto& slot = walk[k][a.to];
      if (!slot || candidate < *slot) slot = std::move(candidate);
    }

  std::optional<Scalar> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (!walk[n][v]) continue;
    std::optional<Scalar> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (!walk[k][v]) continue;
      Scalar mean = (*walk[n][v] - *walk[k][v]) / Scalar(static_cast<long>(n - k));
      if (!worst || mean > *worst) worst = std::move(mean);
    }
    if (worst && (!best || *worst < *best)) best = std::move(worst);
  }
  if (!best) return std::nullopt;
  const Scalar mean = *best;

  std::vector<Scalar> shifted;
  shifted.reserve(arcs.size());
  for (const auto& a : arcs) shifted.push_back(a.cost - mean);
  std::vector<Scalar> potential(n, Scalar(0));
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      Scalar candidate = potential[arcs[i].from] + shifted[i];
      if (candidate < potential[arcs[i].to]) {
        potential[arcs[i].to] = std::move(candidate);
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (potential[arcs[i].from] + shifted[i] == potential[arcs[i].to]) tight[arcs[i].from].push_back(i);

  // Iterative DFS for a cycle among tight arcs.
  enum : char { White, Gray, Black };
  std::vector<char> color(n, White);
  std::vector<std::size_t> via(n, 0);  // arc used to enter a gray vertex
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == tight[v].size()) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t arc = tight[v][next++];
      const std::size_t w = arcs[arc].to;
      if (color[w] == White) {
        color[w] = Gray;
        via[w] = arc;
        stack.emplace_back(w, 0);
      } else if (color[w] == Gray) {
        MeanCycle<Scalar> cycle{mean, {arc}};
        for (std::size_t u = arcs[arc].from; u != w; u = arcs[via[u]].from) cycle.arcs.push_back(via[u]);
        std::reverse(cycle.arcs.begin() + 1, cycle.arcs.end());
        // Rotate so the cycle starts at w: arcs are now arc, then path w->...->from(arc).
        std::rotate(cycle.arcs.begin(), cycle.arcs.begin() + 1, cycle.arcs.end());
        return cycle;
      }
    }
  }
  throw std::logic_error("minimum mean cycle: no tight cycle found");
}

}  // namespace tcspace::detail
