#pragma once

#include <optional>
#include <string>
#include <vector>

#include "refpoly/graph.hpp"

namespace refpoly::cli {

// Ambient-dimension cap for analyses, read from REFPOLY_MAX_DIM (default 10)
// and compared against the vertex count. Throws InputError on a malformed
// value.
int max_dimension();
// Throws CapacityError if g has more vertices than max_dimension().
void enforce_dimension_cap(const Graph& g);

// One graph description. Textual form "kind:value", kinds cycle, path,
// complete, empty, multipartite (comma list), edges (file), graph6 (string).
struct GraphSource {
  std::string kind;
  std::string value;
};

GraphSource parse_graph_source(const std::string& text);
Graph load_graph(const GraphSource& source);
std::string describe(const GraphSource& source);

// First graph6 line of a file, or the argument itself when no such file
// exists.
Graph load_graph6(const std::string& file_or_code);

// Comma-separated positive integers, e.g. "2,2,2".
std::vector<int> parse_int_list(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace refpoly::cli
