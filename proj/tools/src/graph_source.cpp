#include "refpoly_cli/graph_source.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "refpoly/errors.hpp"

namespace refpoly::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InputError("invalid " + what + ": '" + text + "'");
  return value;
}

}  // namespace

int max_dimension() {
  const char* env = std::getenv("REFPOLY_MAX_DIM");
  if (env == nullptr || *env == '\0') return 10;
  const int cap = parse_int(env, "REFPOLY_MAX_DIM");
  if (cap < 1) throw InputError("REFPOLY_MAX_DIM must be positive");
  return cap;
}

void enforce_dimension_cap(const Graph& g) {
  const int cap = max_dimension();
  if (g.vertex_count() > cap) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; the dimension cap is " + std::to_string(cap) +
                        " (set REFPOLY_MAX_DIM to raise it)");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "integer list entry"));
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphSource parse_graph_source(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("graph source must look like kind:value, got '" + text + "'");
  return GraphSource{text.substr(0, colon), text.substr(colon + 1)};
}

Graph load_graph(const GraphSource& s) {
  if (s.kind == "cycle") return cycle(parse_int(s.value, "cycle length"));
  if (s.kind == "path") return path(parse_int(s.value, "path length"));
  if (s.kind == "complete") return complete(parse_int(s.value, "vertex count"));
  if (s.kind == "empty") return empty_graph(parse_int(s.value, "vertex count"));
  if (s.kind == "multipartite") return complete_multipartite(parse_int_list(s.value));
  if (s.kind == "edges") return parse_edge_list(read_file(s.value));
  if (s.kind == "graph6") return load_graph6(s.value);
  throw InputError("unknown graph kind '" + s.kind + "'");
}

Graph load_graph6(const std::string& file_or_code) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(file_or_code, ec)) return parse_graph6(file_or_code);
  std::istringstream in(read_file(file_or_code));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw InputError("no graph6 line in '" + file_or_code + "'");
}

std::string describe(const GraphSource& s) { return s.kind + ":" + s.value; }

}  // namespace refpoly::cli
