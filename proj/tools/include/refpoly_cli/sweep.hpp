#pragma once

#include <iosfwd>
#include <optional>

#include "refpoly_cli/analysis.hpp"

namespace refpoly::cli {

struct SweepOptions {
  int max_vertices = 6;
  int min_vertices = 1;
  bool skip_idp = false;
  bool skip_groebner = false;
  std::optional<int> idp_bound;
  // Toric checks only for [-B,A]* with at most this many columns.
  std::size_t max_groebner_variables = 40;
};

struct SweepSummary {
  int graphs = 0;
  int omega_reflexive = 0;
  int inconsistent = 0;
  int skipped_lines = 0;
  // Smallest vertex count with a non-reflexive Omega, if any.
  std::optional<int> first_non_reflexive_d;
  Json non_reflexive = Json::array();  // graph6 strings

  Json to_json(int max_vertices) const;
};

// Hansen-case sweep over one representative of every isomorphism class
// with min_vertices..max_vertices vertices. Emits one JSON line per graph.
// Throws CapacityError above 6 vertices unless IDP and Groebner checks are
// skipped, and above 7 in any case.
SweepSummary sweep_all(const SweepOptions& options, std::ostream& out);

// Same, for graphs read one graph6 string per line. Malformed lines are
// reported on `err` and counted in skipped_lines.
SweepSummary sweep_stream(std::istream& in, const SweepOptions& options, std::ostream& out,
                          std::ostream& err);

}  // namespace refpoly::cli
