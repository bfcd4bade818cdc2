#include "refpoly/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "refpoly/errors.hpp"

namespace refpoly {

VRep::VRep(int ambient_dim, std::vector<LatticePoint> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
  if (ambient_dim_ < 1) throw DimensionError("ambient dimension must be positive");
  std::set<LatticePoint> seen;
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != ambient_dim_) {
      throw DimensionError("point length differs from the ambient dimension");
    }
    if (!seen.insert(p).second) throw PreconditionError("point list contains a duplicate");
  }
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Facet& f) {
  return os << f.normal << " . x <= " << f.offset;
}

int affine_dimension(const VRep& v) {
  if (v.points().empty()) throw PreconditionError("affine dimension of an empty point set");
  const LatticePoint& base = v.points().front();
  std::vector<std::vector<Coord>> diffs;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::vector<Coord> d(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) d[k] = checked_add(v.points()[i][k], -base[k]);
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(to_rational(diffs)));
}

ConvexHull convex_hull(const VRep& v) {
  const int d = v.ambient_dim();
  if (v.points().empty() || affine_dimension(v) != d) {
    throw DimensionError("convex hull needs a full-dimensional point set in dimension " +
                         std::to_string(d));
  }
  std::vector<std::vector<Coord>> rows;
  rows.reserve(v.size());
  for (const auto& p : v.points()) {
    std::vector<Coord> r(p);
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  // Rays y of {y : y.(p,1) >= 0} are facets -y[0..d) . x <= y[d].
  ConeRays cone = extreme_rays(rows);

  std::vector<std::pair<Facet, Incidence>> facets;
  facets.reserve(cone.rays.size());
  for (std::size_t k = 0; k < cone.rays.size(); ++k) {
    const auto& y = cone.rays[k];
    Facet f;
    f.normal.resize(d);
    for (int i = 0; i < d; ++i) f.normal[i] = -y[i];
    const Coord g = gcd_of(f.normal);
    if (g == 0) throw InconsistencyError("zero facet normal");
    for (Coord& c : f.normal) c /= g;
    if (y[d] % g != 0) throw InconsistencyError("facet offset not integral after scaling");
    f.offset = y[d] / g;
    facets.emplace_back(std::move(f), std::move(cone.incidence[k]));
  }
  std::sort(facets.begin(), facets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // A point is a vertex iff no other point is tight on a superset of its
  // facets.
  const std::size_t n = v.size();
  std::vector<Incidence> on(n, Incidence(facets.size()));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t i = 0; i < n; ++i)
      if (facets[f].second.test(i)) on[i].set(f);
  std::vector<std::size_t> vertex_index;
  for (std::size_t i = 0; i < n; ++i) {
    bool extreme = true;
    for (std::size_t j = 0; j < n && extreme; ++j) {
      if (j != i && on[i].is_subset_of(on[j])) extreme = false;
    }
    if (extreme) vertex_index.push_back(i);
  }

  std::vector<LatticePoint> vertices;
  for (std::size_t i : vertex_index) vertices.push_back(v.points()[i]);
  HRep hrep{d, {}};
  std::vector<Incidence> tight;
  for (auto& [facet, inc] : facets) {
    Incidence t(vertex_index.size());
    for (std::size_t k = 0; k < vertex_index.size(); ++k)
      if (inc.test(vertex_index[k])) t.set(k);
    hrep.facets.push_back(std::move(facet));
    tight.push_back(std::move(t));
  }
  return ConvexHull{VRep(d, std::move(vertices)), std::move(hrep), std::move(tight)};
}

std::vector<RationalPoint> vertices_of(const HRep& h) {
  const int d = h.ambient_dim;
  std::vector<std::vector<Coord>> rows;
  for (const auto& f : h.facets) {
    if (static_cast<int>(f.normal.size()) != d) throw DimensionError("facet normal length mismatch");
    std::vector<Coord> r(d + 1);
    for (int i = 0; i < d; ++i) r[i] = -f.normal[i];
    r[d] = f.offset;
    rows.push_back(std::move(r));
  }
  std::vector<Coord> positive(d + 1, 0);
  positive[d] = 1;
  rows.push_back(positive);
  ConeRays cone;
  try {
    cone = extreme_rays(rows);
  } catch (const DimensionError&) {
    throw DimensionError("inequality system is unbounded (its normals do not span)");
  }
  std::vector<RationalPoint> out;
  for (const auto& y : cone.rays) {
    if (y[d] == 0) throw DimensionError("inequality system is unbounded");
    RationalPoint p(d);
    for (int i = 0; i < d; ++i) {
      p[i] = mpq_class(static_cast<long>(y[i]), static_cast<long>(y[d]));
      p[i].canonicalize();
    }
    out.push_back(std::move(p));
  }
  if (static_cast<int>(out.size()) < d + 1) throw DimensionError("inequality system has no interior");
  return out;
}

namespace {

template <typename T>
int compare_facet(const Facet& f, std::span<const T> p) {
  if (p.size() != f.normal.size()) throw DimensionError("point dimension mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += mpq_class(static_cast<long>(f.normal[i])) * p[i];
  return cmp(s, mpq_class(static_cast<long>(f.offset)));
}

template <typename T>
bool contains_impl(const HRep& h, std::span<const T> p, bool strict) {
  for (const auto& f : h.facets) {
    const int c = compare_facet(f, p);
    if (c > 0 || (strict && c == 0)) return false;
  }
  return true;
}

}  // namespace

bool contains(const HRep& h, std::span<const mpq_class> p) { return contains_impl(h, p, false); }
bool contains(const HRep& h, std::span<const Coord> p) { return contains_impl(h, p, false); }
bool strictly_contains(const HRep& h, std::span<const mpq_class> p) {
  return contains_impl(h, p, true);
}
bool strictly_contains(const HRep& h, std::span<const Coord> p) { return contains_impl(h, p, true); }

bool is_reflexive(const ConvexHull& hull) {
  return std::all_of(hull.hrep.facets.begin(), hull.hrep.facets.end(),
                     [](const Facet& f) { return f.offset == 1; });
}

bool is_reflexive(const VRep& v) { return is_reflexive(convex_hull(v)); }

std::vector<RationalPoint> dual_polytope(const ConvexHull& hull) {
  std::vector<RationalPoint> out;
  for (const auto& f : hull.hrep.facets) {
    if (f.offset <= 0) throw PreconditionError("dual polytope needs the origin in the interior");
    RationalPoint p;
    for (Coord a : f.normal) {
      mpq_class q(static_cast<long>(a), static_cast<long>(f.offset));
      q.canonicalize();
      p.push_back(std::move(q));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RationalPoint> dual_polytope(const VRep& v) { return dual_polytope(convex_hull(v)); }

std::size_t facet_count(const VRep& v) { return convex_hull(v).hrep.facets.size(); }

bool is_centrally_symmetric(const ConvexHull& hull) {
  const auto& pts = hull.vertices.points();
  std::set<LatticePoint> vertices(pts.begin(), pts.end());
  for (const auto& p : pts) {
    LatticePoint q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
    if (!vertices.contains(q)) return false;
  }
  return true;
}

bool is_centrally_symmetric(const VRep& v) { return is_centrally_symmetric(convex_hull(v)); }

bool is_two_level(const ConvexHull& hull) {
  for (const auto& f : hull.hrep.facets) {
    std::set<Coord> values;
    for (const auto& p : hull.vertices.points()) {
      Coord s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s = checked_add(s, checked_mul(f.normal[i], p[i]));
      values.insert(s);
      if (values.size() > 2) return false;
    }
    if (values.size() != 2) return false;
  }
  return true;
}

bool is_two_level(const VRep& v) { return is_two_level(convex_hull(v)); }

}  // namespace refpoly
