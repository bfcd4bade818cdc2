#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace refpoly {

// Largest vertex count a Graph can hold (adjacency rows are 32-bit masks).
inline constexpr int kMaxGraphVertices = 31;

// Largest vertex count accepted by the definition-based perfectness test.
inline constexpr int kMaxPerfectDefinitionVertices = 10;

using VertexMask = std::uint32_t;

// Subset of [d]; vertex i (1-based) is bit i-1.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(VertexMask mask) : mask_(mask) {}
  static VertexSubset of(std::initializer_list<int> members);

  VertexMask mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int vertex) const;
  // Members in increasing order, 1-based.
  std::vector<int> members() const;

  friend bool operator==(VertexSubset, VertexSubset) = default;

 private:
  VertexMask mask_ = 0;
};

using Edge = std::pair<int, int>;

// Finite simple graph on the vertex set [d] = {1, ..., d}.
class Graph {
 public:
  // Throws InputError on loops, out-of-range endpoints, or d outside
  // [1, kMaxGraphVertices]. Duplicate edges (in either orientation) collapse.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  bool adjacent(int i, int j) const;
  // Neighbourhood of vertex i as a mask over [d].
  VertexMask neighbors(int i) const { return adjacency_[i - 1]; }
  VertexMask all_vertices() const;

  std::vector<Edge> edges() const;  // sorted, i < j
  std::size_t edge_count() const;

  bool is_stable(VertexMask subset) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> adjacency_;
};

std::ostream& operator<<(std::ostream& os, const Graph& g);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSubset w);
Graph suspension(const Graph& g);

// All stable sets in canonical order: decreasing cardinality, ties broken
// lexicographically on the increasing member list. The empty set is last.
std::vector<VertexSubset> stable_sets(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

// chi(H) == omega(H) for every induced subgraph H. Throws CapacityError when
// d exceeds kMaxPerfectDefinitionVertices.
bool is_perfect_definition(const Graph& g);

// Induced odd cycle of length >= 5, as a vertex list in cycle order, or none.
// The first hole in canonical DFS order is returned: smallest start vertex,
// neighbours tried in increasing order.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);
// Odd hole of the complement; the returned list is in the complement's
// cycle order.
std::optional<std::vector<int>> find_odd_antihole(const Graph& g);
bool is_perfect_spgt(const Graph& g);

// Builders. cycle(n) has edges {i,i+1} and {1,n}; path(n) has edges {i,i+1};
// complete_multipartite fills parts with consecutive labels, so (2,2,2) has
// parts {1,2}, {3,4}, {5,6}.
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);

// Edge-list text: first line d, then one "i j" per line (1-based).
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Standard graph6 (ASCII offset 63), vertex counts up to kMaxGraphVertices.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

// Smallest edge-bitmask over all vertex relabelings; equal for isomorphic
// graphs. Exponential in d; d <= 11.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class on exactly d vertices, in
// increasing canonical-code order. d <= 7.
std::vector<Graph> nonisomorphic_graphs(int d);

}  // namespace refpoly
