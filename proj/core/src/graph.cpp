#include "refpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "refpoly/errors.hpp"

namespace refpoly {

namespace {

int lowest_vertex(VertexMask m) { return std::countr_zero(m) + 1; }

VertexMask bit(int vertex) { return VertexMask{1} << (vertex - 1); }

}  // namespace

VertexSubset VertexSubset::of(std::initializer_list<int> members) {
  VertexMask m = 0;
  for (int v : members) {
    if (v < 1 || v > kMaxGraphVertices) throw InputError("vertex out of range");
    m |= bit(v);
  }
  return VertexSubset(m);
}

int VertexSubset::size() const { return std::popcount(mask_); }

bool VertexSubset::contains(int vertex) const {
  return vertex >= 1 && vertex <= kMaxGraphVertices && (mask_ & bit(vertex)) != 0;
}

std::vector<int> VertexSubset::members() const {
  std::vector<int> out;
  for (VertexMask m = mask_; m != 0; m &= m - 1) out.push_back(lowest_vertex(m));
  return out;
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 1 || vertex_count > kMaxGraphVertices) {
    throw InputError("vertex count " + std::to_string(vertex_count) +
                     " outside [1, " + std::to_string(kMaxGraphVertices) + "]");
  }
  adjacency_.assign(vertex_count, 0);
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > vertex_count || j > vertex_count) {
      throw InputError("edge {" + std::to_string(i) + "," + std::to_string(j) +
                       "} has an endpoint outside [" +
                       std::to_string(vertex_count) + "]");
    }
    if (i == j) throw InputError("loop at vertex " + std::to_string(i));
    adjacency_[i - 1] |= bit(j);
    adjacency_[j - 1] |= bit(i);
  }
}

bool Graph::adjacent(int i, int j) const {
  return (adjacency_[i - 1] & bit(j)) != 0;
}

VertexMask Graph::all_vertices() const {
  const int d = vertex_count();
  return d == 32 ? ~VertexMask{0} : (VertexMask{1} << d) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  const int d = vertex_count();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexMask row : adjacency_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::is_stable(VertexMask subset) const {
  for (VertexMask m = subset; m != 0; m &= m - 1) {
    if (adjacency_[std::countr_zero(m)] & subset) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(d=" << g.vertex_count() << ", edges={";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    os << (first ? "" : ",") << "{" << i << "," << j << "}";
    first = false;
  }
  return os << "})";
}

Graph complement(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<Edge> edges;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return Graph(d, edges);
}

Graph induced_subgraph(const Graph& g, VertexSubset w) {
  if (w.empty()) throw InputError("induced subgraph needs a nonempty vertex set");
  if ((w.mask() & ~g.all_vertices()) != 0) {
    throw InputError("vertex subset is not contained in [d]");
  }
  const std::vector<int> keep = w.members();
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.adjacent(keep[a], keep[b]))
        edges.emplace_back(static_cast<int>(a + 1), static_cast<int>(b + 1));
  return Graph(static_cast<int>(keep.size()), edges);
}

Graph suspension(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (int i = 1; i <= d; ++i) edges.emplace_back(i, d + 1);
  return Graph(d + 1, edges);
}

std::vector<VertexSubset> stable_sets(const Graph& g) {
  const int d = g.vertex_count();
  if (d > 26) throw CapacityError("stable set enumeration limited to 26 vertices");
  std::vector<VertexSubset> out;
  const std::uint64_t limit = std::uint64_t{1} << d;
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (g.is_stable(static_cast<VertexMask>(m)))
      out.emplace_back(static_cast<VertexMask>(m));
  }
  std::sort(out.begin(), out.end(), [](VertexSubset a, VertexSubset b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members() < b.members();
  });
  return out;
}

namespace {

// Largest stable subset size of every mask, indexed by mask.
std::vector<int> max_stable_table(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<int> best(std::size_t{1} << d, 0);
  for (std::size_t m = 1; m < best.size(); ++m) {
    const int v = std::countr_zero(m);
    const auto rest = static_cast<VertexMask>(m & (m - 1));
    // Either v is left out, or v is taken and its neighbours are dropped.
    best[m] = std::max(best[rest], 1 + best[rest & ~g.neighbors(v + 1)]);
  }
  return best;
}

// Chromatic number of every induced subgraph, indexed by vertex mask.
std::vector<int> chromatic_table(const Graph& g) {
  const int d = g.vertex_count();
  const std::size_t size = std::size_t{1} << d;
  std::vector<char> stable(size, 0);
  for (std::size_t m = 0; m < size; ++m) stable[m] = g.is_stable(static_cast<VertexMask>(m));
  std::vector<int> chi(size, 0);
  for (std::size_t m = 1; m < size; ++m) {
    // Some colour class contains the lowest vertex of m.
    const std::size_t low = m & (~m + 1);
    const std::size_t rest = m ^ low;
    int best = d + 1;
    for (std::size_t s = rest;; s = (s - 1) & rest) {
      const std::size_t cls = s | low;
      if (stable[cls]) best = std::min(best, 1 + chi[m ^ cls]);
      if (s == 0) break;
    }
    chi[m] = best;
  }
  return chi;
}

void require_definition_capacity(const Graph& g) {
  if (g.vertex_count() > kMaxPerfectDefinitionVertices) {
    throw CapacityError("definition-based perfectness test is limited to " +
                        std::to_string(kMaxPerfectDefinitionVertices) +
                        " vertices");
  }
}

}  // namespace

int clique_number(const Graph& g) {
  require_definition_capacity(g);
  return max_stable_table(complement(g)).back();
}

int chromatic_number(const Graph& g) {
  require_definition_capacity(g);
  return chromatic_table(g).back();
}

bool is_perfect_definition(const Graph& g) {
  require_definition_capacity(g);
  const std::vector<int> omega = max_stable_table(complement(g));
  const std::vector<int> chi = chromatic_table(g);
  return omega == chi;
}

namespace {

struct HoleSearch {
  const Graph& g;
  std::vector<int> path;
  VertexMask on_path = 0;

  // path[0] is the smallest vertex of the cycle; path[1..] are larger.
  bool extend() {
    const int first = path.front();
    const int last = path.back();
    const VertexMask interior = on_path & ~bit(first) & ~bit(last);
    for (int u = first + 1; u <= g.vertex_count(); ++u) {
      if ((on_path & bit(u)) || !g.adjacent(last, u)) continue;
      if (g.neighbors(u) & interior) continue;  // chord to the path
      if (path.size() >= 2 && g.adjacent(u, first)) {
        // u closes an induced cycle of length |path| + 1.
        const std::size_t length = path.size() + 1;
        if (length >= 5 && length % 2 == 1) {
          path.push_back(u);
          return true;
        }
        continue;
      }
      path.push_back(u);
      on_path |= bit(u);
      if (extend()) return true;
      on_path &= ~bit(u);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
  for (int start = 1; start <= g.vertex_count(); ++start) {
    HoleSearch search{g, {start}, bit(start)};
    if (search.extend()) return search.path;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_odd_antihole(const Graph& g) {
  return find_odd_hole(complement(g));
}

bool is_perfect_spgt(const Graph& g) {
  return !find_odd_hole(g) && !find_odd_antihole(g);
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph path(int n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw InputError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph empty_graph(int n) {
  if (n < 1) throw InputError("empty graph needs at least 1 vertex");
  return Graph(n, {});
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw InputError("complete multipartite graph needs a part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw InputError("part sizes must be positive");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int d = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (part_of[i - 1] != part_of[j - 1]) edges.emplace_back(i, j);
  return Graph(d, edges);
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = nl + 1;
  }
  if (lines.empty()) throw InputError("edge list is empty");
  int d = 0;
  if (lines[0].size() != 1 || !parse_int(lines[0][0], d)) {
    throw InputError("edge list must start with the vertex count on its own line");
  }
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    int i = 0;
    int j = 0;
    if (lines[k].size() != 2 || !parse_int(lines[k][0], i) || !parse_int(lines[k][1], j)) {
      throw InputError("malformed edge line " + std::to_string(k + 1));
    }
    edges.emplace_back(i, j);
  }
  return Graph(d, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (auto [i, j] : g.edges()) os << i << ' ' << j << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw InputError("empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) throw InputError("graph6 byte out of range");
  }
  int n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw InputError("graph6 vertex count too large");
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    pos = 4;
  }
  if (n < 1 || n > kMaxGraphVertices) {
    throw InputError("graph6 vertex count " + std::to_string(n) + " unsupported");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) throw InputError("graph6 line has the wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, edges);
}

std::string format_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

// Edge {i,j} (0-based, i<j) maps to bit index j(j-1)/2 + i.
std::uint64_t edge_code(const std::vector<VertexMask>& adj, const std::vector<int>& relabel) {
  std::uint64_t code = 0;
  const int d = static_cast<int>(adj.size());
  for (int u = 0; u < d; ++u) {
    for (VertexMask m = adj[u]; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (v <= u) continue;
      int a = relabel[u];
      int b = relabel[v];
      if (a > b) std::swap(a, b);
      code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int d = g.vertex_count();
  if (d > 11) throw CapacityError("canonical codes are limited to 11 vertices");
  std::vector<VertexMask> adj(d);
  for (int i = 0; i < d; ++i) adj[i] = g.neighbors(i + 1);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edge_code(adj, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

Graph graph_from_code(int d, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int b = 1; b < d; ++b)
    for (int a = 0; a < b; ++a)
      if (code & (std::uint64_t{1} << (b * (b - 1) / 2 + a))) edges.emplace_back(a + 1, b + 1);
  return Graph(d, edges);
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int d) {
  if (d < 1) throw InputError("vertex count must be positive");
  if (d > 7) throw CapacityError("isomorphism-class enumeration is limited to 7 vertices");
  // Every graph on d vertices is a graph on d-1 vertices plus one vertex.
  std::set<std::uint64_t> codes{0};
  for (int n = 2; n <= d; ++n) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : codes) {
      const Graph base = graph_from_code(n - 1, code);
      const std::vector<Edge> base_edges = base.edges();
      for (VertexMask nbhd = 0; nbhd < (VertexMask{1} << (n - 1)); ++nbhd) {
        std::vector<Edge> edges = base_edges;
        for (VertexMask m = nbhd; m != 0; m &= m - 1) edges.emplace_back(std::countr_zero(m) + 1, n);
        next.insert(canonical_code(Graph(n, edges)));
      }
    }
    codes = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_code(d, code));
  return out;
}

}  // namespace refpoly
