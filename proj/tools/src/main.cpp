#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "refpoly/constructions.hpp"
#include "refpoly/errors.hpp"
#include "refpoly/toric.hpp"
#include "refpoly_cli/analysis.hpp"
#include "refpoly_cli/examples.hpp"
#include "refpoly_cli/graph_source.hpp"
#include "refpoly_cli/sweep.hpp"

namespace {

using namespace refpoly;
using namespace refpoly::cli;

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kCapacity = 3 };

// Flags selecting the first graph, plus --with for the second.
struct GraphFlags {
  std::optional<int> cycle, path, complete;
  std::optional<std::string> multipartite, edges, graph6, with;

  void attach(CLI::App& app) {
    auto* group = app.add_option_group("graph", "graph selection (exactly one)");
    group->add_option("--cycle", cycle, "cycle on N vertices");
    group->add_option("--path", path, "path on N vertices");
    group->add_option("--complete", complete, "complete graph on N vertices");
    group->add_option("--complete-multipartite", multipartite, "part sizes, e.g. 2,2,2");
    group->add_option("--edges", edges, "edge-list file: d, then one 'i j' per line");
    group->add_option("--graph6", graph6, "graph6 file (first line) or graph6 string");
    group->require_option(1);
    app.add_option("--with", with,
                   "second graph as kind:value (cycle, path, complete, empty, multipartite, "
                   "edges, graph6); defaults to the first graph");
  }

  Graph first() const {
    if (cycle) return refpoly::cycle(*cycle);
    if (path) return refpoly::path(*path);
    if (complete) return refpoly::complete(*complete);
    if (multipartite) return complete_multipartite(parse_int_list(*multipartite));
    if (edges) return parse_edge_list(read_file(*edges));
    return load_graph6(*graph6);
  }

  std::pair<Graph, Graph> load() const {
    Graph g1 = first();
    Graph g2 = with ? load_graph(parse_graph_source(*with)) : g1;
    if (g1.vertex_count() != g2.vertex_count())
      throw InputError("both graphs need the same vertex count");
    enforce_dimension_cap(g1);
    return {std::move(g1), std::move(g2)};
  }
};

int cmd_analyze(const GraphFlags& flags, const AnalysisOptions& options, bool json) {
  const auto [g1, g2] = flags.load();
  const AnalysisResult r = analyze(g1, g2, options);
  if (json)
    std::cout << r.report.dump(2) << "\n";
  else
    std::cout << format_report(r.report);
  return r.consistent ? kOk : kMismatch;
}

int cmd_examples(const std::optional<std::string>& only, const std::optional<std::string>& golden_file) {
  const std::string text = golden_file ? read_file(*golden_file) : std::string(embedded_golden());
  Json golden;
  try {
    golden = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("golden file: ") + e.what());
  }
  const ExampleSummary s = run_examples(golden, only, std::cout);
  std::cout << "examples: " << s.examples << ", checks: " << s.checks << ", mismatches: " << s.mismatches
            << "\n";
  return s.mismatches == 0 ? kOk : kMismatch;
}

int cmd_sweep(const SweepOptions& options, const std::optional<std::string>& graph6_file) {
  SweepSummary s;
  if (graph6_file) {
    std::ifstream in(*graph6_file);
    if (!in) throw InputError("cannot open '" + *graph6_file + "'");
    s = sweep_stream(in, options, std::cout, std::cerr);
  } else {
    s = sweep_all(options, std::cout);
  }
  std::cout << s.to_json(options.max_vertices).dump() << "\n";
  if (s.inconsistent > 0) return kMismatch;
  if (s.skipped_lines > 0) return kInputError;
  return kOk;
}

int cmd_delta(const GraphFlags& flags, const std::string& which, bool json) {
  const auto [g1, g2] = flags.load();
  Json out;
  auto add = [&](const std::string& name, const VRep& v) {
    const DeltaPolynomial d = delta_polynomial(v);
    out[name] = Json{{"delta", to_json(d)}, {"normalized_volume", d.at_one().get_str()}};
    if (!json) std::cout << name << ": " << d.to_string() << " (volume " << d.at_one().get_str() << ")\n";
  };
  if (which == "gamma" || which == "all") add("gamma", gamma_of_graphs(g1, g2));
  if (which == "omega" || which == "all") add("omega", omega_of_graphs(g1, g2));
  if (which == "gamma-suspended" || which == "all")
    add("gamma_suspended", gamma_of_graphs(suspension(g1), suspension(g2)));
  if (json) std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_groebner(const GraphFlags& flags, const std::string& matrix, bool json) {
  const auto [g1, g2] = flags.load();
  const auto a = stable_set_configuration(g1);
  const auto b = stable_set_configuration(g2);
  const auto orders = canonical_orders(a, b);
  std::vector<std::string> names;
  std::vector<Binomial> gb;
  if (matrix == "a") {
    gb = toric_groebner(a, orders.a);
    names = default_names(a.size());
  } else if (matrix == "b") {
    gb = toric_groebner(b, orders.b);
    for (std::size_t j = 1; j <= b.size(); ++j) names.push_back("y" + std::to_string(j));
  } else {
    gb = toric_groebner(omega_matrix(a, b), orders.combined);
    for (std::size_t j = 1; j <= b.size(); ++j) names.push_back("y" + std::to_string(j));
    for (std::size_t i = 1; i <= a.size(); ++i) names.push_back("x" + std::to_string(i));
    names.push_back("z");
  }
  const MonomialOrder& order = matrix == "a" ? orders.a : matrix == "b" ? orders.b : orders.combined;
  const auto leads = initial_ideal_min_gens(gb, order);
  if (json) {
    Json basis = Json::array();
    for (const auto& f : gb) basis.push_back(Json{{"lead", f.lead.exponents}, {"trail", f.trail.exponents}});
    std::cout << Json{{"variables", names}, {"basis", basis}, {"squarefree", is_squarefree(leads)}}.dump(2)
              << "\n";
  } else {
    for (const auto& f : gb) std::cout << to_string(f, names) << "\n";
    std::cout << gb.size() << " binomials; initial ideal " << (is_squarefree(leads) ? "" : "not ")
              << "squarefree\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflexive polytopes from pairs of graphs: construction, Ehrhart data, IDP and toric checks"};
  app.require_subcommand(1);

  GraphFlags analyze_graphs, delta_graphs, groebner_graphs;
  AnalysisOptions analysis;
  bool json = false;
  int idp_bound = 0;

  auto* analyze = app.add_subcommand("analyze", "full report for Gamma and Omega of a graph pair");
  analyze_graphs.attach(*analyze);
  analyze->add_flag("--json", json, "emit the JSON report");
  analyze->add_option("--idp-bound", idp_bound, "largest dilation checked for IDP")->check(CLI::PositiveNumber);
  analyze->add_flag("--skip-idp", analysis.skip_idp, "do not check IDP");
  analyze->add_flag("--skip-delta", analysis.skip_delta, "do not compute delta-polynomials");
  analyze->add_flag("--skip-groebner", analysis.skip_groebner, "do not run toric checks");
  analyze->add_flag("--facets", analysis.facets, "include facet inequalities in the JSON report");
  std::size_t max_groebner_variables = 50;
  analyze->add_option("--max-groebner-variables", max_groebner_variables,
                      "skip toric checks when [-B,A]* has more columns (0: no limit)")
      ->capture_default_str();

  std::optional<std::string> only, golden;
  auto* examples = app.add_subcommand("examples", "recompute the reference examples and diff against golden values");
  examples->add_option("--only", only, "run one example id, e.g. 4.3");
  examples->add_option("--golden", golden, "golden JSON file replacing the built-in values");

  SweepOptions sweep_options;
  std::optional<std::string> sweep_graph6;
  auto* sweep = app.add_subcommand("sweep", "check Omega(Q_G, Q_G) over all small graphs");
  sweep->add_option("--max-vertices", sweep_options.max_vertices, "largest vertex count")->capture_default_str();
  sweep->add_option("--min-vertices", sweep_options.min_vertices, "smallest vertex count")->capture_default_str();
  sweep->add_option("--graph6", sweep_graph6, "read graphs from a graph6 file instead");
  sweep->add_option("--idp-bound", idp_bound, "largest dilation checked for IDP")->check(CLI::PositiveNumber);
  sweep->add_flag("--skip-idp", sweep_options.skip_idp, "do not check IDP");
  sweep->add_flag("--skip-groebner", sweep_options.skip_groebner, "do not run toric checks");

  std::string delta_which = "all";
  auto* delta = app.add_subcommand("delta", "delta-polynomials of Gamma, Omega and Gamma over the suspensions");
  delta_graphs.attach(*delta);
  delta->add_option("--polytope", delta_which, "gamma, omega, gamma-suspended or all")
      ->check(CLI::IsMember({"gamma", "omega", "gamma-suspended", "all"}));
  delta->add_flag("--json", json, "emit JSON");

  std::string matrix = "omega";
  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of a toric ideal");
  groebner_graphs.attach(*groebner);
  groebner->add_option("--matrix", matrix, "omega ([-B,A]*), a or b")->check(CLI::IsMember({"omega", "a", "b"}));
  groebner->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (idp_bound > 0) {
      analysis.idp_bound = idp_bound;
      sweep_options.idp_bound = idp_bound;
    }
    if (max_groebner_variables > 0) analysis.max_groebner_variables = max_groebner_variables;
    if (*analyze) return cmd_analyze(analyze_graphs, analysis, json);
    if (*examples) return cmd_examples(only, golden);
    if (*sweep) return cmd_sweep(sweep_options, sweep_graph6);
    if (*delta) return cmd_delta(delta_graphs, delta_which, json);
    if (*groebner) return cmd_groebner(groebner_graphs, matrix, json);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
