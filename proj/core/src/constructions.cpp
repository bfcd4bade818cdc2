#include "refpoly/constructions.hpp"

#include <set>

#include "refpoly/errors.hpp"

namespace refpoly {

namespace {

LatticePoint negated(const LatticePoint& p) {
  LatticePoint q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
  return q;
}

void require_same_dim(const VRep& p, const VRep& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionError("polytopes live in different ambient dimensions");
  }
}

}  // namespace

VRep stable_set_polytope(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<LatticePoint> points;
  for (VertexSubset w : stable_sets(g)) {
    LatticePoint p(d, 0);
    for (int v : w.members()) p[v - 1] = 1;
    points.push_back(std::move(p));
  }
  return VRep(d, std::move(points));
}

VRep gamma(const VRep& p, const VRep& q) {
  require_same_dim(p, q);
  std::vector<LatticePoint> points;
  std::set<LatticePoint> seen;
  auto add = [&](LatticePoint x) {
    if (seen.insert(x).second) points.push_back(std::move(x));
  };
  for (const auto& x : p.points()) add(x);
  for (const auto& y : q.points()) add(negated(y));
  return VRep(p.ambient_dim(), std::move(points));
}

VRep omega(const VRep& p, const VRep& q) {
  require_same_dim(p, q);
  std::vector<LatticePoint> points;
  for (const auto& x : p.points()) {
    LatticePoint lifted(x);
    lifted.push_back(1);
    points.push_back(std::move(lifted));
  }
  for (const auto& y : q.points()) {
    LatticePoint lifted = negated(y);
    lifted.push_back(-1);
    points.push_back(std::move(lifted));
  }
  return VRep(p.ambient_dim() + 1, std::move(points));
}

VRep hansen(const Graph& g) {
  const VRep q = stable_set_polytope(g);
  return omega(q, q);
}

VRep bipyramid(const VRep& p) {
  const int d = p.ambient_dim();
  std::vector<LatticePoint> points;
  for (const auto& x : p.points()) {
    LatticePoint lifted(x);
    lifted.push_back(0);
    points.push_back(std::move(lifted));
  }
  LatticePoint apex(d + 1, 0);
  apex[d] = 1;
  points.push_back(apex);
  apex[d] = -1;
  points.push_back(apex);
  return VRep(d + 1, std::move(points));
}

namespace {

void require_same_vertices(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw InputError("graphs must share the vertex set [d]");
  }
}

}  // namespace

VRep gamma_of_graphs(const Graph& g1, const Graph& g2) {
  require_same_vertices(g1, g2);
  return gamma(stable_set_polytope(g1), stable_set_polytope(g2));
}

VRep omega_of_graphs(const Graph& g1, const Graph& g2) {
  require_same_vertices(g1, g2);
  return omega(stable_set_polytope(g1), stable_set_polytope(g2));
}

}  // namespace refpoly
