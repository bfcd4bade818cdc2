#include "refpoly_cli/sweep.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "refpoly/constructions.hpp"
#include "refpoly/decomposition.hpp"
#include "refpoly/errors.hpp"
#include "refpoly/toric.hpp"

namespace refpoly::cli {

namespace {

void check_cap(int d, const SweepOptions& options) {
  const int cap = (options.skip_idp && options.skip_groebner) ? 7 : 6;
  if (d > cap) {
    throw CapacityError("sweep supports at most " + std::to_string(cap) + " vertices" +
                        (cap == 6 ? " (7 with --skip-idp and --skip-groebner)" : ""));
  }
}

void sweep_one(const Graph& g, const SweepOptions& options, SweepSummary& s, std::ostream& out) {
  AnalysisOptions a;
  a.idp_bound = options.idp_bound;
  a.skip_idp = options.skip_idp;
  a.skip_delta = true;
  a.skip_groebner = options.skip_groebner;
  a.max_groebner_variables = options.max_groebner_variables;
  const AnalysisResult r = analyze(g, g, a);

  const bool omega_reflexive = r.report["omega"]["reflexive"].get<bool>();
  Json line{{"graph6", format_graph6(g)},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"perfect", r.report["graph"]["g1"]["perfect_spgt"]},
            {"gamma_reflexive", r.report["gamma"]["reflexive"]},
            {"omega_reflexive", omega_reflexive},
            {"omega_facets", r.report["omega"]["facet_count"]},
            {"consistent", r.consistent}};
  if (r.report["omega"].contains("idp")) {
    line["gamma_idp"] = r.report["gamma"]["idp"]["holds"];
    line["omega_idp"] = r.report["omega"]["idp"]["holds"];
  }
  if (r.report["theorems"].contains("squarefree_initial_ideal")) {
    const auto& t = r.report["theorems"]["squarefree_initial_ideal"];
    line["squarefree"] = t.contains("skipped") ? Json("skipped") : t["computed_squarefree"];
  }
  out << line.dump() << "\n";
  out.flush();

  ++s.graphs;
  if (omega_reflexive) {
    ++s.omega_reflexive;
  } else {
    s.non_reflexive.push_back(format_graph6(g));
    if (!s.first_non_reflexive_d || g.vertex_count() < *s.first_non_reflexive_d)
      s.first_non_reflexive_d = g.vertex_count();
  }
  if (!r.consistent) ++s.inconsistent;
}

}  // namespace

Json SweepSummary::to_json(int max_vertices) const {
  // The claim concerns graphs on at most 6 vertices; it is judged on the
  // swept graphs only.
  const bool refuted = first_non_reflexive_d && *first_non_reflexive_d <= 6;
  Json out{{"graphs", graphs},
           {"omega_reflexive", omega_reflexive},
           {"non_reflexive", non_reflexive},
           {"inconsistent", inconsistent},
           {"skipped_lines", skipped_lines},
           {"max_vertices", max_vertices},
           {"reflexive_up_to_6_vertices", refuted ? "refuted" : "confirmed"}};
  return Json{{"summary", out}};
}

SweepSummary sweep_all(const SweepOptions& options, std::ostream& out) {
  if (options.min_vertices < 1 || options.min_vertices > options.max_vertices)
    throw InputError("invalid vertex range");
  check_cap(options.max_vertices, options);
  SweepSummary s;
  for (int d = options.min_vertices; d <= options.max_vertices; ++d)
    for (const Graph& g : nonisomorphic_graphs(d)) sweep_one(g, options, s, out);
  return s;
}

SweepSummary sweep_stream(std::istream& in, const SweepOptions& options, std::ostream& out,
                          std::ostream& err) {
  SweepSummary s;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::optional<Graph> g;
    try {
      g = parse_graph6(line);
    } catch (const InputError& e) {
      err << "warning: line " << number << ": " << e.what() << "; skipped\n";
      ++s.skipped_lines;
      continue;
    }
    check_cap(g->vertex_count(), options);
    sweep_one(*g, options, s, out);
  }
  return s;
}

}  // namespace refpoly::cli
