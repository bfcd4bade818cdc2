#include "refpoly_cli/analysis.hpp"

#include <sstream>

#include "refpoly/constructions.hpp"
#include "refpoly/decomposition.hpp"
#include "refpoly/toric.hpp"

namespace refpoly::cli {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}, {"graph6", format_graph6(g)}};
}

Json to_json(const DeltaPolynomial& delta) {
  Json out = Json::array();
  for (const auto& c : delta.coeffs()) out.push_back(c.get_str());
  return out;
}

Json to_json(const LatticePoint& p) {
  Json out = Json::array();
  for (Coord x : p) out.push_back(x);
  return out;
}

namespace {

struct PolytopeFacts {
  ConvexHull hull;
  bool reflexive = false;
  std::optional<IdpReport> idp;
  std::optional<DeltaPolynomial> delta;
};

Json idp_json(const IdpReport& r) {
  Json out{{"holds", r.holds}, {"checked_bound", r.checked_bound}};
  if (r.witness) out["witness"] = Json{{"n", r.witness->n}, {"point", to_json(r.witness->point)}};
  return out;
}

PolytopeFacts study(const VRep& v, const AnalysisOptions& options, Json& block) {
  PolytopeFacts f{convex_hull(v), false, std::nullopt, std::nullopt};
  f.reflexive = is_reflexive(f.hull);
  block["dimension"] = v.ambient_dim();
  block["generators"] = v.size();
  block["vertices"] = f.hull.vertices.size();
  block["lattice_points"] = count_lattice_points(f.hull, 1);
  block["facet_count"] = f.hull.hrep.facets.size();
  block["reflexive"] = f.reflexive;
  block["centrally_symmetric"] = is_centrally_symmetric(f.hull);
  block["two_level"] = is_two_level(f.hull);
  if (!options.skip_idp) {
    f.idp = has_idp(f.hull, options.idp_bound);
    block["idp"] = idp_json(*f.idp);
  }
  if (!options.skip_delta) {
    f.delta = delta_polynomial(f.hull);
    block["delta"] = to_json(*f.delta);
    block["normalized_volume"] = normalized_volume(*f.delta).get_str();
    block["palindromic"] = is_palindromic(*f.delta);
  }
  if (options.facets) {
    Json facets = Json::array();
    for (const auto& facet : f.hull.hrep.facets)
      facets.push_back(Json{{"normal", to_json(facet.normal)}, {"offset", facet.offset}});
    block["facets"] = facets;
  }
  return f;
}

Json graph_block(const Graph& g) {
  Json out = to_json(g);
  out["perfect_spgt"] = is_perfect_spgt(g);
  if (g.vertex_count() <= kMaxPerfectDefinitionVertices) out["perfect_definition"] = is_perfect_definition(g);
  const auto hole = find_odd_hole(g);
  const auto antihole = find_odd_antihole(g);
  out["odd_hole"] = hole ? Json(*hole) : Json(nullptr);
  out["odd_antihole"] = antihole ? Json(*antihole) : Json(nullptr);
  return out;
}

// A non-decomposable point of n * Omega(Q_G1, Q_G2) built from an odd hole
// or antihole of whichever graph is imperfect. Omega(Q_G2, Q_G1) is the
// negative of Omega(Q_G1, Q_G2), so a witness for the swapped pair is negated.
Json omega_witness(const Graph& g1, const Graph& g2, const ConvexHull& omega_hull) {
  const int d = g1.vertex_count();
  const bool swap = is_perfect_spgt(g1);
  const Graph& bad = swap ? g2 : g1;
  DilatedPoint w;
  Json out;
  if (const auto hole = find_odd_hole(bad)) {
    w = odd_hole_witness(bad, *hole, d);
    out["kind"] = "odd_hole";
    out["cycle"] = *hole;
  } else {
    const auto antihole = find_odd_antihole(bad);
    w = odd_antihole_witness(bad, *antihole, d);
    out["kind"] = "odd_antihole";
    out["cycle"] = *antihole;
  }
  if (swap)
    for (auto& x : w.point) x = -x;
  out["graph"] = swap ? 2 : 1;
  out["n"] = w.n;
  out["point"] = to_json(w.point);
  out["non_decomposable"] = verify_witness(omega_hull, w.n, w.point);
  return out;
}

}  // namespace

AnalysisResult analyze(const Graph& g1, const Graph& g2, const AnalysisOptions& options) {
  AnalysisResult result;
  Json& report = result.report;
  const bool hansen_case = g1 == g2;
  report["graph"] = Json{{"g1", graph_block(g1)}, {"g2", graph_block(g2)}, {"same_graph", hansen_case}};
  const bool perfect = is_perfect_spgt(g1) && is_perfect_spgt(g2);

  Json gamma_block, omega_block;
  const PolytopeFacts gamma = study(gamma_of_graphs(g1, g2), options, gamma_block);
  const PolytopeFacts omega = study(omega_of_graphs(g1, g2), options, omega_block);
  report["gamma"] = gamma_block;
  report["omega"] = omega_block;

  Json theorems;
  auto record = [&](const std::string& key, Json entry, bool ok) {
    entry["consistent"] = ok;
    theorems[key] = std::move(entry);
    result.consistent = result.consistent && ok;
  };

  {
    // Gamma reflexive <=> Gamma reflexive with IDP <=> both graphs perfect.
    bool ok = gamma.reflexive == perfect;
    Json e{{"both_perfect", perfect}, {"reflexive", gamma.reflexive}};
    if (gamma.idp) {
      e["idp"] = gamma.idp->holds;
      ok = ok && (!gamma.reflexive || gamma.idp->holds);
    }
    record("gamma_reflexive_iff_perfect", e, ok);
  }
  {
    // Omega has IDP <=> Omega reflexive with IDP <=> both graphs perfect.
    bool ok = true;
    Json e{{"both_perfect", perfect}, {"reflexive", omega.reflexive}};
    if (perfect) ok = omega.reflexive;
    if (omega.idp) {
      e["idp"] = omega.idp->holds;
      ok = ok && omega.idp->holds == perfect && (!omega.idp->holds || omega.reflexive);
    }
    if (!perfect) {
      e["witness"] = omega_witness(g1, g2, omega.hull);
      ok = ok && e["witness"]["non_decomposable"].get<bool>();
    }
    record("omega_idp_iff_perfect", e, ok);
  }
  if (gamma.delta && omega.delta) {
    bool ok = gamma.reflexive == is_palindromic(*gamma.delta) &&
              omega.reflexive == is_palindromic(*omega.delta);
    record("reflexive_iff_palindromic",
           Json{{"gamma", is_palindromic(*gamma.delta)}, {"omega", is_palindromic(*omega.delta)}}, ok);

    const ConvexHull suspended = convex_hull(gamma_of_graphs(suspension(g1), suspension(g2)));
    const DeltaPolynomial delta_suspended = delta_polynomial(suspended);
    const DeltaPolynomial lifted = gamma.delta->times_one_plus_t();
    const bool eq_suspended = *omega.delta == delta_suspended;
    const bool eq_lifted = *omega.delta == lifted;
    const mpz_class vg = normalized_volume(*gamma.delta);
    const mpz_class vo = normalized_volume(*omega.delta);
    const bool ratio_two = vo == 2 * vg && vo == normalized_volume(delta_suspended);
    Json e{{"both_perfect", perfect},
           {"delta_gamma_suspended", to_json(delta_suspended)},
           {"gamma_suspended_facet_count", suspended.hrep.facets.size()},
           {"omega_equals_gamma_suspended", eq_suspended},
           {"omega_equals_one_plus_t_times_gamma", eq_lifted},
           {"volume_ratio_two", ratio_two}};
    record("delta_identity", e, !perfect || (eq_suspended && eq_lifted && ratio_two));
  }
  if (!options.skip_groebner) {
    const std::size_t variables = stable_sets(g1).size() + stable_sets(g2).size() + 1;
    if (options.max_groebner_variables && variables > *options.max_groebner_variables) {
      theorems["squarefree_initial_ideal"] = Json{{"skipped", true}, {"variables", variables}};
    } else {
      SquarefreeTheoremReport r = verify_squarefree_theorem(g1, g2, {.check_geometry = false, .idp_bound = std::nullopt});
      r.omega_reflexive = omega.reflexive;
      if (omega.idp) r.omega_idp = omega.idp->holds;
      Json e{{"variables", r.variables},
             {"harmony", r.harmony},
             {"a_squarefree", r.a_squarefree},
             {"b_squarefree", r.b_squarefree},
             {"hypotheses_hold", r.hypotheses_hold},
             {"initial_generators", r.computed.size()},
             {"computed_squarefree", r.computed_squarefree}};
      if (r.predicted) e["matches_prediction"] = r.matches_prediction;
      record("squarefree_initial_ideal", e, r.consistent());
    }
  }
  report["theorems"] = theorems;
  return result;
}

namespace {

std::string yes_no(const Json& v) { return v.get<bool>() ? "yes" : "no"; }

std::string delta_string(const Json& coeffs) {
  std::vector<mpz_class> c;
  for (const auto& x : coeffs) c.emplace_back(x.get<std::string>());
  const int dim = static_cast<int>(c.size()) - 1;
  return DeltaPolynomial(std::move(c), dim).to_string();
}

void polytope_lines(std::ostream& os, const std::string& name, const Json& b) {
  os << name << ": dim " << b["dimension"] << ", " << b["lattice_points"] << " lattice points, "
     << b["vertices"] << " vertices, " << b["facet_count"] << " facets\n";
  os << "  reflexive " << yes_no(b["reflexive"]) << ", centrally symmetric "
     << yes_no(b["centrally_symmetric"]) << ", 2-level " << yes_no(b["two_level"]) << "\n";
  if (b.contains("idp")) {
    const auto& idp = b["idp"];
    os << "  IDP " << yes_no(idp["holds"]);
    if (idp.contains("witness"))
      os << " (dilation " << idp["witness"]["n"] << " point " << idp["witness"]["point"].dump() << ")";
    else
      os << " (checked to n=" << idp["checked_bound"] << ")";
    os << "\n";
  }
  if (b.contains("delta"))
    os << "  delta " << delta_string(b["delta"]) << ", volume " << b["normalized_volume"].get<std::string>()
       << "\n";
}

}  // namespace

std::string format_report(const Json& report) {
  std::ostringstream os;
  for (const char* key : {"g1", "g2"}) {
    const auto& g = report["graph"][key];
    os << key << ": " << g["vertices"] << " vertices, " << g["edges"].size() << " edges, graph6 "
       << g["graph6"].get<std::string>() << ", perfect " << yes_no(g["perfect_spgt"]);
    if (!g["odd_hole"].is_null()) os << ", odd hole " << g["odd_hole"].dump();
    if (!g["odd_antihole"].is_null()) os << ", odd antihole " << g["odd_antihole"].dump();
    os << "\n";
  }
  polytope_lines(os, "gamma", report["gamma"]);
  polytope_lines(os, "omega", report["omega"]);
  for (const auto& [name, e] : report["theorems"].items()) {
    os << "check " << name << ": ";
    if (e.contains("skipped"))
      os << "skipped (" << e["variables"] << " variables)\n";
    else
      os << (e["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << "\n";
  }
  if (report["theorems"].contains("delta_identity")) {
    const auto& e = report["theorems"]["delta_identity"];
    os << "gamma over suspensions: " << e["gamma_suspended_facet_count"] << " facets, delta "
       << delta_string(e["delta_gamma_suspended"]) << "\n";
  }
  return os.str();
}

}  // namespace refpoly::cli
