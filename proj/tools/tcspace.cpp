// tcspace: command-line front end. JSON in, JSON (or DOT) out.
//
// Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tcspace/duality.hpp"
#include "tcspace/families.hpp"
#include "tcspace/io.hpp"
#include "tcspace/obstruction.hpp"
#include "tcspace/oracle.hpp"
#include "tcspace/solver.hpp"

namespace {

using tcspace::Error;
using tcspace::ErrorCode;
using tcspace::io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_points() {
  const char* env = std::getenv("TCSPACE_MAX_POINTS");
  if (env == nullptr || *env == '\0') return 64;
  try {
    std::size_t used = 0;
    const long value = std::stol(env, &used);
    if (used != std::string(env).size() || value < 2) throw std::invalid_argument(env);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw UsageError(std::string("TCSPACE_MAX_POINTS must be an integer >= 2, got '") + env + "'");
  }
}

void check_size(std::size_t points) {
  const std::size_t cap = max_points();
  if (points > cap)
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(points) + " points exceeds TCSPACE_MAX_POINTS=" + std::to_string(cap));
}

// Checks the size before any O(n^2) work.
void check_size(const Json& doc) {
  for (const char* key : {"points", "vertices"})
    if (doc.is_object() && doc.contains(key) && doc[key].is_array()) check_size(doc[key].size());
}

tcspace::io::SpaceDocument load_space(const std::string& path) {
  const Json doc = tcspace::io::read_json_file(path);
  check_size(doc);
  return tcspace::io::space_from_json(doc);
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << content;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

struct Args {
  std::string space, problem, problem2, lipschitz, digraph, candidates, dot, peel, base = "quadrilateral";
  std::string family;
  bool maximal = false, unique = false, as_graph = false;
  int k = 0, grid = 5, n = -1, m = -1;
  std::size_t random = 0, jobs = 1, min_points = 3, max_points_random = 8;
  std::uint64_t seed = 0;
};

int run_validate(const Args& a) {
  const Json doc = tcspace::io::read_json_file(a.space);
  check_size(doc);
  try {
    auto space = tcspace::io::space_from_json(doc).space;
    emit(Json{{"valid", true}, {"points", space.size()}, {"base", space.point(space.base())}});
    return 0;
  } catch (const Error& e) {
    Json report{{"valid", false}, {"error", e.name()}, {"message", e.what()}};
    if (!e.indices().empty()) report["indices"] = e.indices();
    emit(report);
    throw;
  }
}

int run_canon(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  if (!a.dot.empty()) write_text(a.dot, tcspace::to_dot(graph));
  emit(tcspace::io::canonical_to_json(graph));
  return 0;
}

int run_norm(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  const auto f = tcspace::io::problem_from_json(graph.space(), tcspace::io::read_json_file(a.problem));
  emit(Json{{"tc_norm", tcspace::to_string(tcspace::tc_norm(graph, f).norm)}});
  return 0;
}

int run_roadmap(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  const auto f = tcspace::io::problem_from_json(graph.space(), tcspace::io::read_json_file(a.problem));
  const tcspace::Roadmap p = a.maximal ? tcspace::maximal_roadmap(graph, f) : tcspace::tc_norm(graph, f).roadmap;
  const bool optimal = tcspace::improving_cycle(graph, p).optimal();
  if (!a.dot.empty()) {
    std::vector<tcspace::Arc> arcs;
    for (std::size_t k = 0; k < graph.num_edges(); ++k) {
      const auto& e = graph.edge(k);
      const int s = tcspace::sign(p(static_cast<Eigen::Index>(k)));
      if (s > 0) arcs.push_back({e.tail, e.head, k});
      if (s < 0) arcs.push_back({e.head, e.tail, k});
    }
    write_text(a.dot, tcspace::to_dot(graph, tcspace::DirectedSubgraph(std::move(arcs))));
  }
  emit(tcspace::io::roadmap_to_json(graph, p, optimal));
  return 0;
}

int run_basis(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  emit(tcspace::io::cycle_basis_to_json(graph, tcspace::cycle_basis(graph)));
  return 0;
}

Json components_json(const tcspace::CanonicalGraph& graph, const std::vector<std::size_t>& comp) {
  std::size_t count = 0;
  for (std::size_t c : comp) count = std::max(count, c + 1);
  Json out = Json::array();
  for (std::size_t c = 0; c < count; ++c) {
    Json members = Json::array();
    for (std::size_t v = 0; v < comp.size(); ++v)
      if (comp[v] == c) members.push_back(graph.space().point(v));
    out.push_back(std::move(members));
  }
  return out;
}

int run_dual(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  const auto f = tcspace::io::problem_from_json(graph.space(), tcspace::io::read_json_file(a.problem));
  const auto s = tcspace::supporting_function(graph, f);
  Json out{{"tc_norm", tcspace::to_string(tcspace::tc_norm(graph, f).norm)},
           {"value", tcspace::to_string(tcspace::evaluate(graph, s, f))},
           {"supporting", tcspace::io::lipschitz_to_json(graph.space(), s)}};
  if (a.unique) {
    const auto report = tcspace::is_unique_supporting(graph, f);
    out["unique"] = report.unique;
    out["components"] = components_json(graph, report.component);
    if (report.witness) out["witness"] = tcspace::io::lipschitz_to_json(graph.space(), *report.witness);
  }
  emit(out);
  return 0;
}

int run_downhill(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  tcspace::DirectedSubgraph h;
  if (!a.lipschitz.empty()) {
    const auto l = tcspace::io::lipschitz_from_json(graph.space(), tcspace::io::read_json_file(a.lipschitz));
    h = tcspace::downhill_graph(graph, l);
  } else {
    const auto f = tcspace::io::problem_from_json(graph.space(), tcspace::io::read_json_file(a.problem));
    h = tcspace::directed_graph_of(graph, f);
  }
  if (!a.dot.empty()) write_text(a.dot, tcspace::to_dot(graph, h));
  emit(tcspace::io::digraph_to_json(graph, h));
  return 0;
}

int run_realizable(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  const auto h = tcspace::io::digraph_from_json(graph, tcspace::io::read_json_file(a.digraph));
  const auto r = tcspace::realizable_as_downhill(graph, h);
  Json out{{"realizable", r.realizable}, {"slack", tcspace::to_string(r.slack)}};
  if (r.function) {
    out["lipschitz"] = tcspace::io::lipschitz_to_json(graph.space(), *r.function);
    out["problem"] = tcspace::io::problem_to_json(graph.space(), tcspace::downhill_to_problem(graph, h));
  }
  emit(out);
  return 0;
}

Json support_json(const tcspace::CanonicalGraph& graph, const tcspace::TransportationProblem& f) {
  return tcspace::io::digraph_to_json(graph, tcspace::directed_graph_of(graph, f))["arcs"];
}

int run_disjoint(const Args& a) {
  const auto graph = load_space(a.space).canonical();
  const auto f = tcspace::io::problem_from_json(graph.space(), tcspace::io::read_json_file(a.problem));
  const auto g = tcspace::io::problem_from_json(graph.space(), tcspace::io::read_json_file(a.problem2));
  const bool disjoint = tcspace::strongly_disjoint(graph, f, g);
  emit(Json{{"strongly_disjoint", disjoint}, {"support_f", support_json(graph, f)}, {"support_g", support_json(graph, g)}});
  return 0;
}

int run_certify(const Args& a) {
  const auto doc = load_space(a.space);
  const auto graph = doc.canonical();
  if (!a.candidates.empty()) {
    const auto problems = tcspace::io::problems_from_json(graph.space(), tcspace::io::read_json_file(a.candidates));
    const auto cand = tcspace::normalized_candidate(graph, problems);
    const auto check = tcspace::verify_linfty_basis(graph, cand, a.grid);
    const auto patterns = tcspace::check_sign_pattern_disjointness(graph, cand);
    Json out{{"k", cand.k()}, {"sign_vectors", check.sign_vectors_ok}, {"grid", check.grid_ok},
             {"basis", check.passed()}, {"sign_patterns_disjoint", patterns.passed}};
    if (!check.counterexample.empty()) {
      Json coeffs = Json::array();
      for (const auto& c : check.counterexample) coeffs.push_back(tcspace::to_string(c));
      out["counterexample"] = std::move(coeffs);
    }
    if (check.passed()) {
      Json counts = Json::array();
      for (std::size_t j = 0; j < cand.k(); ++j) counts.push_back(tcspace::count_disjoint_roadmaps(graph, cand, j).count());
      out["disjoint_roadmaps"] = std::move(counts);
    }
    emit(out);
    return 0;
  }
  if (a.k == 0) throw UsageError("certify needs --k or --candidates");
  if (a.peel.empty()) {
    emit(tcspace::io::certificate_to_json(tcspace::certify_no_linfty(graph, a.k)));
    return 0;
  }
  if (!doc.family) throw Error(ErrorCode::PeelNotApplicable, "space file declares no family");
  if (doc.family->name != a.peel)
    throw Error(ErrorCode::PeelNotApplicable, "space file declares family '" + doc.family->name + "', not '" + a.peel + "'");
  emit(tcspace::io::certificate_to_json(tcspace::certify_no_linfty(graph, a.k, *doc.family)));
  return 0;
}

int run_gen(const Args& a) {
  auto need = [](int value, const char* flag) {
    if (value < 0) throw UsageError(std::string("gen needs ") + flag);
    return value;
  };
  tcspace::Family family;
  if (a.family == "diamond") family = tcspace::diamond(need(a.n, "--n"));
  else if (a.family == "grid") family = tcspace::grid(need(a.n, "--n"));
  else if (a.family == "cycle") family = tcspace::cycle(need(a.n, "--n"));
  else if (a.family == "complete_bipartite") family = tcspace::complete_bipartite(need(a.m, "--m"), need(a.n, "--n"));
  else if (a.family == "recursive") {
    tcspace::TwoPortGraph base;
    if (a.base == "quadrilateral") base = tcspace::quadrilateral_two_port();
    else if (a.base == "k23") base = tcspace::k23_two_port();
    else base = tcspace::io::two_port_from_json(tcspace::io::read_json_file(a.base));
    family = tcspace::recursive_family(base, need(a.n, "--n"));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  check_size(family.graph.vertices.size());
  Json out = a.as_graph ? tcspace::io::graph_to_json(family.graph, family.graph.vertices.front())
                        : tcspace::io::space_to_json(family.space());
  out["family"] = tcspace::io::descriptor_to_json(family.descriptor);
  emit(out);
  return 0;
}

Json comparison_json(const std::string& label, const tcspace::OracleComparison& c) {
  return Json{{"instance", label}, {"solver", tcspace::to_string(c.solver)}, {"oracle", tcspace::to_string(c.oracle)}, {"agree", c.agree()}};
}

int run_oracle_check(const Args& a) {
  std::vector<Json> results;
  if (!a.space.empty()) {
    if (a.problem.empty()) throw UsageError("oracle-check --space needs --problem");
    const auto graph = load_space(a.space).canonical();
    const auto problem_doc = tcspace::io::read_json_file(a.problem);
    std::vector<tcspace::TransportationProblem> problems;
    if (problem_doc.is_array()) problems = tcspace::io::problems_from_json(graph.space(), problem_doc);
    else problems.push_back(tcspace::io::problem_from_json(graph.space(), problem_doc));
    for (std::size_t i = 0; i < problems.size(); ++i)
      results.push_back(comparison_json(std::to_string(i), tcspace::compare_with_oracle(graph, problems[i])));
  } else {
    if (a.random == 0) throw UsageError("oracle-check needs --space/--problem or --random N --seed S");
    if (a.min_points < 2 || a.min_points > a.max_points_random) throw UsageError("need 2 <= --min-points <= --max-points");
    check_size(a.max_points_random);
    tcspace::Rng rng(a.seed);
    std::vector<tcspace::RandomInstance> instances;
    for (std::size_t i = 0; i < a.random; ++i) instances.push_back(tcspace::random_instance(rng, a.min_points, a.max_points_random));
    results.resize(instances.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min(a.jobs, instances.size()));
    std::vector<std::string> failures(jobs);
    {
      std::vector<std::jthread> workers;
      for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < instances.size(); i += jobs) {
              const auto graph = tcspace::canonical_graph(instances[i].space);
              results[i] = comparison_json(std::to_string(i) + ":" + instances[i].kind + ":" + std::to_string(graph.num_vertices()),
                                           tcspace::compare_with_oracle(graph, instances[i].problem));
            }
          } catch (const std::exception& e) {
            failures[w] = e.what();
          }
        });
    }
    for (const auto& f : failures)
      if (!f.empty()) throw std::runtime_error(f);
  }
  std::size_t agreed = 0;
  Json mismatches = Json::array();
  for (const auto& r : results) {
    if (r["agree"].get<bool>()) ++agreed;
    else mismatches.push_back(r);
  }
  Json out{{"checked", results.size()}, {"agreed", agreed}, {"mismatches", mismatches}};
  if (!a.space.empty()) out["results"] = results;
  else out["seed"] = a.seed;
  emit(out);
  if (!mismatches.empty()) throw Error(ErrorCode::OracleMismatch, std::to_string(mismatches.size()) + " instance(s) disagree with the oracle");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact transportation cost norms, roadmaps, potentials and ℓ∞ obstructions on finite metric spaces", "tcspace"};
  app.require_subcommand(1);
  Args a;

  auto space_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--space", a.space, "metric-space or weighted-graph JSON");
    if (required) opt->required()->check(CLI::ExistingFile);
    else opt->check(CLI::ExistingFile);
  };
  auto problem_opt = [&](CLI::App* sub) {
    return sub->add_option("--problem", a.problem, "problem JSON {\"f\": {...}}")->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "check the metric axioms");
  space_opt(validate);

  auto* canon = app.add_subcommand("canon", "canonical graph");
  space_opt(canon);
  canon->add_option("--dot", a.dot, "also write Graphviz DOT here");

  auto* norm = app.add_subcommand("norm", "transportation cost norm");
  space_opt(norm);
  problem_opt(norm)->required();

  auto* roadmap = app.add_subcommand("roadmap", "optimal roadmap");
  space_opt(roadmap);
  problem_opt(roadmap)->required();
  roadmap->add_flag("--maximal", a.maximal, "roadmap whose support is all of T_f");
  roadmap->add_option("--dot", a.dot, "also write the directed support as DOT");

  auto* basis = app.add_subcommand("basis", "fundamental cycle basis");
  space_opt(basis);

  auto* dual = app.add_subcommand("dual", "supporting Lipschitz function");
  space_opt(dual);
  problem_opt(dual)->required();
  dual->add_flag("--unique", a.unique, "decide uniqueness and emit a second supporting function if any");

  auto* downhill = app.add_subcommand("downhill", "downhill graph of a function, or directed graph of a problem");
  space_opt(downhill);
  auto* lip = downhill->add_option("--lipschitz", a.lipschitz, "Lipschitz function JSON")->check(CLI::ExistingFile);
  auto* prob = problem_opt(downhill);
  lip->excludes(prob);
  downhill->add_option("--dot", a.dot, "also write DOT here");

  auto* realizable = app.add_subcommand("realizable", "is a directed subgraph a downhill graph");
  space_opt(realizable);
  realizable->add_option("--digraph", a.digraph, "digraph JSON {\"arcs\": [...]}")->required()->check(CLI::ExistingFile);

  auto* disjoint = app.add_subcommand("disjoint", "strong disjointness of two problems");
  space_opt(disjoint);
  problem_opt(disjoint)->required();
  disjoint->add_option("--problem2", a.problem2, "second problem JSON")->required()->check(CLI::ExistingFile);

  auto* certify = app.add_subcommand("certify", "certificate that TC(X) contains no isometric ℓ∞^k");
  space_opt(certify);
  auto* k_opt = certify->add_option("--k", a.k, "dimension k >= 3");
  certify->add_option("--peel", a.peel, "recursive family declared in the space file (diamond | recursive)");
  auto* cand_opt = certify->add_option("--candidates", a.candidates, "list of problems to test as an ℓ∞^k basis")->check(CLI::ExistingFile);
  certify->add_option("--grid", a.grid, "grid resolution for --candidates")->check(CLI::Range(2, 50));
  cand_opt->excludes(k_opt);

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("family", a.family, "diamond | grid | complete_bipartite | cycle | recursive")->required();
  gen->add_option("--n", a.n, "size or level")->check(CLI::NonNegativeNumber);
  gen->add_option("--m", a.m, "first part size for complete_bipartite")->check(CLI::NonNegativeNumber);
  gen->add_option("--base", a.base, "quadrilateral | k23 | two-port JSON file");
  gen->add_flag("--graph", a.as_graph, "emit the weighted-graph format instead of the distance matrix");

  auto* oracle = app.add_subcommand("oracle-check", "compare the solver against the dense LP oracle");
  space_opt(oracle, false);
  problem_opt(oracle);
  auto* random_opt = oracle->add_option("--random", a.random, "number of random instances");
  auto* seed_opt = oracle->add_option("--seed", a.seed, "random seed");
  random_opt->needs(seed_opt);
  oracle->add_option("--min-points", a.min_points, "smallest random instance");
  oracle->add_option("--max-points", a.max_points_random, "largest random instance");
  oracle->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    max_points();
    if (validate->parsed()) return run_validate(a);
    if (canon->parsed()) return run_canon(a);
    if (norm->parsed()) return run_norm(a);
    if (roadmap->parsed()) return run_roadmap(a);
    if (basis->parsed()) return run_basis(a);
    if (dual->parsed()) return run_dual(a);
    if (downhill->parsed()) {
      if (a.lipschitz.empty() && a.problem.empty()) throw UsageError("downhill needs --lipschitz or --problem");
      return run_downhill(a);
    }
    if (realizable->parsed()) return run_realizable(a);
    if (disjoint->parsed()) return run_disjoint(a);
    if (certify->parsed()) return run_certify(a);
    if (gen->parsed()) return run_gen(a);
    if (oracle->parsed()) return run_oracle_check(a);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << tcspace::io::error_to_json(e).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 2;
}
