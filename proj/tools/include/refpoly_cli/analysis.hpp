#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "refpoly/ehrhart.hpp"
#include "refpoly/geometry.hpp"
#include "refpoly/graph.hpp"

namespace refpoly::cli {

using Json = nlohmann::json;

struct AnalysisOptions {
  std::optional<int> idp_bound;
  bool skip_idp = false;
  bool skip_delta = false;
  bool skip_groebner = false;
  bool facets = false;  // emit facet inequalities
  // Toric checks are skipped when [-B,A]* has more columns than this.
  std::optional<std::size_t> max_groebner_variables;
};

struct AnalysisResult {
  Json report;
  // Every theorem check that ran agreed with the computed geometry.
  bool consistent = true;
};

// Keys: graph, gamma, omega, theorems. Big integers are decimal strings.
AnalysisResult analyze(const Graph& g1, const Graph& g2, const AnalysisOptions& options);

Json to_json(const Graph& g);
Json to_json(const DeltaPolynomial& delta);
Json to_json(const LatticePoint& p);

// Multi-line human summary of an analysis report.
std::string format_report(const Json& report);

}  // namespace refpoly::cli
