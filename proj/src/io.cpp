#include "tcspace/io.hpp"

#include <algorithm>
#include <fstream>

namespace tcspace::io {
namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  return doc[key];
}

std::string text(const Json& value, const char* what) {
  if (!value.is_string()) malformed(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::size_t point_index(const MetricSpace& space, const Json& value) {
  const std::string name = text(value, "point name");
  auto index = space.index_of(name);
  if (!index) throw Error(ErrorCode::InvalidInput, "unknown point '" + name + "'");
  return *index;
}

std::size_t name_index(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::InvalidInput, "unknown point '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::string> names_from(const Json& list, const char* what) {
  if (!list.is_array()) malformed(std::string(what) + " must be a list");
  std::vector<std::string> names;
  for (const auto& item : list) names.push_back(text(item, "point name"));
  return names;
}

VertexVector vertex_map(const MetricSpace& space, const Json& map, const char* what) {
  if (!map.is_object()) malformed(std::string(what) + " must be an object keyed by point");
  VertexVector values = VertexVector::Zero(ix(space.size()));
  for (const auto& [name, value] : map.items()) {
    auto index = space.index_of(name);
    if (!index) throw Error(ErrorCode::InvalidInput, "unknown point '" + name + "'");
    values(ix(*index)) = rational_from_json(value);
  }
  return values;
}

Json vertex_map_to_json(const MetricSpace& space, const VertexVector& values, bool skip_zero) {
  Json map = Json::object();
  for (std::size_t v = 0; v < space.size(); ++v)
    if (!skip_zero || values(ix(v)) != 0) map[space.point(v)] = rational_to_json(values(ix(v)));
  return map;
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  malformed("rationals must be strings such as \"3/2\" or integers");
}

Json rational_to_json(const Rational& value) { return to_string(value); }

CanonicalGraph SpaceDocument::canonical() const {
  if (graph) return canonical_graph(*graph, space.base());
  return canonical_graph(space);
}

SpaceDocument space_from_json(const Json& doc) {
  if (!doc.is_object()) malformed("space document must be an object");
  std::optional<FamilyDescriptor> family;
  if (doc.contains("family")) family = descriptor_from_json(doc["family"]);

  if (doc.contains("vertices")) {
    WeightedGraph graph{names_from(doc["vertices"], "vertices"), {}};
    const Json& edges = field(doc, "edges");
    if (!edges.is_array()) malformed("edges must be a list");
    for (const auto& e : edges)
      graph.edges.push_back({name_index(graph.vertices, text(field(e, "u"), "u")),
                             name_index(graph.vertices, text(field(e, "v"), "v")), rational_from_json(field(e, "w"))});
    std::size_t base = 0;
    if (doc.contains("base")) base = name_index(graph.vertices, text(doc["base"], "base"));
    if (graph.vertices.size() < 2) throw Error(ErrorCode::InvalidInput, "a metric space needs at least 2 points");
    MetricSpace space = shortest_path_metric(graph, base);
    return {std::move(space), std::move(graph), std::move(family)};
  }

  std::vector<std::string> points = names_from(field(doc, "points"), "points");
  const Json& rows = field(doc, "dist");
  if (!rows.is_array()) malformed("dist must be a list of rows");
  Matrix dist(ix(rows.size()), ix(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows.size())
      throw Error(ErrorCode::NonSquare, "distance matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) dist(ix(i), ix(j)) = rational_from_json(rows[i][j]);
  }
  std::size_t base = 0;
  if (doc.contains("base")) base = name_index(points, text(doc["base"], "base"));
  MetricSpace space = validate_metric(std::move(points), std::move(dist), base);
  return {std::move(space), std::nullopt, std::move(family)};
}

Json space_to_json(const MetricSpace& space) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(rational_to_json(space.dist(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"points", space.points()}, {"dist", std::move(rows)}, {"base", space.point(space.base())}};
}

Json graph_to_json(const WeightedGraph& graph, const std::string& base) {
  Json edges = Json::array();
  for (const auto& e : graph.edges)
    edges.push_back(Json{{"u", graph.vertices[e.u]}, {"v", graph.vertices[e.v]}, {"w", rational_to_json(e.w)}});
  return Json{{"vertices", graph.vertices}, {"edges", std::move(edges)}, {"base", base}};
}

Json canonical_to_json(const CanonicalGraph& graph) {
  WeightedGraph plain{graph.space().points(), {}};
  for (const auto& e : graph.edges()) plain.edges.push_back({e.tail, e.head, e.weight});
  return graph_to_json(plain, graph.space().point(graph.space().base()));
}

Json two_port_to_json(const TwoPortGraph& g) {
  Json edges = Json::array();
  for (const auto& a : g.edges)
    edges.push_back(Json{{"from", g.vertices[a.from]}, {"to", g.vertices[a.to]}, {"w", rational_to_json(a.weight)}, {"label", a.label}});
  return Json{{"vertices", g.vertices}, {"edges", std::move(edges)}, {"bottom", g.vertices[g.bottom]}, {"top", g.vertices[g.top]}};
}

TwoPortGraph two_port_from_json(const Json& doc) {
  TwoPortGraph g;
  g.vertices = names_from(field(doc, "vertices"), "vertices");
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) malformed("edges must be a list");
  std::size_t counter = 0;
  for (const auto& e : edges) {
    std::string label = e.contains("label") ? text(e["label"], "label") : std::to_string(counter);
    g.edges.push_back({name_index(g.vertices, text(field(e, "from"), "from")), name_index(g.vertices, text(field(e, "to"), "to")),
                       rational_from_json(field(e, "w")), std::move(label)});
    ++counter;
  }
  g.bottom = name_index(g.vertices, text(field(doc, "bottom"), "bottom"));
  g.top = name_index(g.vertices, text(field(doc, "top"), "top"));
  return g;
}

Json descriptor_to_json(const FamilyDescriptor& family) {
  Json params = Json::object();
  for (const auto& [key, value] : family.params) params[key] = value;
  Json doc{{"name", family.name}, {"params", std::move(params)}, {"generation", family.generation}, {"recursive", family.recursive}};
  if (family.base) doc["base"] = two_port_to_json(*family.base);
  return doc;
}

FamilyDescriptor descriptor_from_json(const Json& doc) {
  FamilyDescriptor family;
  family.name = text(field(doc, "name"), "family name");
  const Json& params = field(doc, "params");
  if (!params.is_object()) malformed("family params must be an object");
  for (const auto& [key, value] : params.items()) {
    if (!value.is_number_integer()) malformed("family params must be integers");
    family.params.emplace_back(key, value.get<long>());
  }
  const Json& generation = field(doc, "generation");
  if (!generation.is_array()) malformed("generation must be a list");
  for (const auto& g : generation) {
    if (!g.is_number_integer()) malformed("generation entries must be integers");
    family.generation.push_back(g.get<int>());
  }
  const Json& recursive = field(doc, "recursive");
  if (!recursive.is_boolean()) malformed("recursive must be a boolean");
  family.recursive = recursive.get<bool>();
  if (doc.contains("base")) family.base = two_port_from_json(doc["base"]);
  return family;
}

TransportationProblem problem_from_json(const MetricSpace& space, const Json& doc) {
  return TransportationProblem(vertex_map(space, field(doc, "f"), "f"));
}

Json problem_to_json(const MetricSpace& space, const TransportationProblem& f) {
  return Json{{"f", vertex_map_to_json(space, f.values(), true)}};
}

Json roadmap_to_json(const CanonicalGraph& graph, const Roadmap& p, bool optimal) {
  Json edges = Json::array();
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    if (p(ix(k)) == 0) continue;
    const Edge& e = graph.edge(k);
    edges.push_back(Json{{"u", graph.space().point(e.tail)}, {"v", graph.space().point(e.head)}, {"p", rational_to_json(p(ix(k)))}});
  }
  return Json{{"cost", rational_to_json(l1d_norm(graph, p))}, {"edges", std::move(edges)}, {"optimal", optimal}};
}

Roadmap roadmap_from_json(const CanonicalGraph& graph, const Json& doc) {
  Roadmap p = Roadmap::Zero(ix(graph.num_edges()));
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) malformed("edges must be a list");
  for (const auto& item : edges) {
    const std::size_t u = point_index(graph.space(), field(item, "u"));
    const std::size_t v = point_index(graph.space(), field(item, "v"));
    auto k = graph.find_edge(u, v);
    if (!k) throw Error(ErrorCode::InvalidInput, "not a canonical edge", {u, v});
    const Rational value = rational_from_json(field(item, "p"));
    p(ix(*k)) += graph.edge(*k).tail == u ? value : Rational(-value);
  }
  return p;
}

Json lipschitz_to_json(const MetricSpace& space, const LipschitzFunction& l) {
  return Json{{"l", vertex_map_to_json(space, l.values(), false)}, {"base", space.point(space.base())}};
}

LipschitzFunction lipschitz_from_json(const MetricSpace& space, const Json& doc) {
  if (doc.contains("base") && point_index(space, doc["base"]) != space.base())
    throw Error(ErrorCode::InvalidInput, "function is based at a different point than the space");
  return LipschitzFunction(vertex_map(space, field(doc, "l"), "l"));
}

Json digraph_to_json(const CanonicalGraph& graph, const DirectedSubgraph& h) {
  Json arcs = Json::array();
  for (const auto& a : h.arcs()) arcs.push_back(Json{{"from", graph.space().point(a.from)}, {"to", graph.space().point(a.to)}});
  return Json{{"arcs", std::move(arcs)}};
}

DirectedSubgraph digraph_from_json(const CanonicalGraph& graph, const Json& doc) {
  const Json& arcs = field(doc, "arcs");
  if (!arcs.is_array()) malformed("arcs must be a list");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& a : arcs) pairs.emplace_back(point_index(graph.space(), field(a, "from")), point_index(graph.space(), field(a, "to")));
  return DirectedSubgraph::from_pairs(graph, pairs);
}

Json cycle_basis_to_json(const CanonicalGraph& graph, const CycleBasis& basis) {
  Json forest = Json::array();
  for (std::size_t k : basis.forest)
    forest.push_back(Json{{"u", graph.space().point(graph.edge(k).tail)}, {"v", graph.space().point(graph.edge(k).head)}});
  Json cycles = Json::array();
  for (const auto& c : basis.cycles) {
    Json vertices = Json::array();
    for (std::size_t v : c.vertices) vertices.push_back(graph.space().point(v));
    cycles.push_back(Json{{"vertices", std::move(vertices)}});
  }
  return Json{{"forest", std::move(forest)}, {"cycles", std::move(cycles)}};
}

OrientedCycle cycle_from_json(const CanonicalGraph& graph, const Json& doc) {
  const Json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) malformed("cycle vertices must be a list");
  std::vector<std::size_t> indices;
  for (const auto& v : vertices) indices.push_back(point_index(graph.space(), v));
  return cycle_through(graph, indices);
}

Json certificate_to_json(const Certificate& cert) {
  Json histogram = Json::object();
  for (const auto& [degree, count] : cert.degree_histogram) histogram[std::to_string(degree)] = count;
  return Json{{"k", cert.k},
              {"verdict", verdict_name(cert.verdict)},
              {"degrees", Json{{"max", cert.max_degree}, {"threshold", cert.threshold}, {"histogram", std::move(histogram)}}},
              {"peeling", cert.peeling}};
}

std::vector<TransportationProblem> problems_from_json(const MetricSpace& space, const Json& doc) {
  if (!doc.is_array()) malformed("expected a list of problems");
  std::vector<TransportationProblem> out;
  for (const auto& item : doc) out.push_back(problem_from_json(space, item));
  return out;
}

Json error_to_json(const Error& error) { return Json{{"error", error.name()}, {"message", error.what()}}; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace tcspace::io
