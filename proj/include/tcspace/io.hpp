#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tcspace/canonical_graph.hpp"
#include "tcspace/digraph.hpp"
#include "tcspace/duality.hpp"
#include "tcspace/families.hpp"
#include "tcspace/obstruction.hpp"
#include "tcspace/solver.hpp"

namespace tcspace::io {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings; plain JSON integers are accepted on input.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

/// A metric space read from either the metric format
///   {"points": [...], "dist": [[...]], "base": "A"}
/// or the weighted-graph format
///   {"vertices": [...], "edges": [{"u", "v", "w"}], "base": "A"}.
/// An optional "family" member carries a generator descriptor.
struct SpaceDocument {
  MetricSpace space;
  std::optional<WeightedGraph> graph;
  std::optional<FamilyDescriptor> family;

  /// Sparse route for graph input, the O(n^3) construction otherwise.
  CanonicalGraph canonical() const;
};

SpaceDocument space_from_json(const Json& doc);
Json space_to_json(const MetricSpace& space);
/// Weighted-graph format; `base` names the base point.
Json graph_to_json(const WeightedGraph& graph, const std::string& base);
/// The canonical graph in weighted-graph format.
Json canonical_to_json(const CanonicalGraph& graph);

Json descriptor_to_json(const FamilyDescriptor& family);
FamilyDescriptor descriptor_from_json(const Json& doc);
Json two_port_to_json(const TwoPortGraph& g);
TwoPortGraph two_port_from_json(const Json& doc);

/// {"f": {"A": "2", "B": "-1"}}; unlisted points get 0.
TransportationProblem problem_from_json(const MetricSpace& space, const Json& doc);
Json problem_to_json(const MetricSpace& space, const TransportationProblem& f);

/// {"cost", "edges": [{"u", "v", "p"}], "optimal"}; u -> v is the edge's
/// reference orientation. Zero entries are omitted.
Json roadmap_to_json(const CanonicalGraph& graph, const Roadmap& p, bool optimal);
Roadmap roadmap_from_json(const CanonicalGraph& graph, const Json& doc);

/// {"l": {...}, "base": "A"}.
Json lipschitz_to_json(const MetricSpace& space, const LipschitzFunction& l);
LipschitzFunction lipschitz_from_json(const MetricSpace& space, const Json& doc);

/// {"arcs": [{"from", "to"}]}.
Json digraph_to_json(const CanonicalGraph& graph, const DirectedSubgraph& h);
DirectedSubgraph digraph_from_json(const CanonicalGraph& graph, const Json& doc);

/// {"forest": [{"u", "v"}], "cycles": [{"vertices": [...]}]}.
Json cycle_basis_to_json(const CanonicalGraph& graph, const CycleBasis& basis);
OrientedCycle cycle_from_json(const CanonicalGraph& graph, const Json& doc);

Json certificate_to_json(const Certificate& cert);

/// A JSON list of problem documents.
std::vector<TransportationProblem> problems_from_json(const MetricSpace& space, const Json& doc);

/// {"error": name, "message": text}.
Json error_to_json(const Error& error);

Json read_json_file(const std::string& path);

}  // namespace tcspace::io
