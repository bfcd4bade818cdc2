#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "refpoly/double_description.hpp"
#include "refpoly/linalg.hpp"

namespace refpoly {

using LatticePoint = std::vector<Coord>;
using RationalPoint = std::vector<mpq_class>;

// Finite, duplicate-free list of lattice points spanning a polytope. The
// points are generators and need not all be vertices.
class VRep {
 public:
  // Throws DimensionError on a length mismatch and PreconditionError on a
  // repeated point.
  VRep(int ambient_dim, std::vector<LatticePoint> points);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  friend bool operator==(const VRep&, const VRep&) = default;

 private:
  int ambient_dim_;
  std::vector<LatticePoint> points_;
};

// normal . x <= offset, with a primitive normal.
struct Facet {
  std::vector<Coord> normal;
  Coord offset = 0;

  friend auto operator<=>(const Facet&, const Facet&) = default;
};

struct HRep {
  int ambient_dim = 0;
  std::vector<Facet> facets;

  friend bool operator==(const HRep&, const HRep&) = default;
};

struct ConvexHull {
  VRep vertices;  // extreme points, in input order
  HRep hrep;      // irredundant, facets sorted by (normal, offset)
  // tight[f] marks the vertices lying on facet f.
  std::vector<Incidence> tight;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, const Facet& f);

int affine_dimension(const VRep& v);

// Throws DimensionError unless the points are full-dimensional.
ConvexHull convex_hull(const VRep& v);

// Vertices of a polytope given by inequalities. Throws DimensionError when
// the system is unbounded or has no interior.
std::vector<RationalPoint> vertices_of(const HRep& h);

bool contains(const HRep& h, std::span<const mpq_class> p);
bool contains(const HRep& h, std::span<const Coord> p);
bool strictly_contains(const HRep& h, std::span<const mpq_class> p);
bool strictly_contains(const HRep& h, std::span<const Coord> p);

// Origin interior and every primitive facet offset equal to 1.
bool is_reflexive(const ConvexHull& hull);
bool is_reflexive(const VRep& v);

// Vertices a/b of the dual, one per facet, in facet order. Throws
// PreconditionError if the origin is not interior.
std::vector<RationalPoint> dual_polytope(const ConvexHull& hull);
std::vector<RationalPoint> dual_polytope(const VRep& v);

std::size_t facet_count(const VRep& v);
bool is_centrally_symmetric(const VRep& v);
bool is_centrally_symmetric(const ConvexHull& hull);
// Every facet normal takes exactly two values on the vertex set.
bool is_two_level(const ConvexHull& hull);
bool is_two_level(const VRep& v);

// Lattice points of the n-th dilate, in lexicographic order. Coordinates
// are enumerated one at a time; the admissible interval of the next
// coordinate comes from every facet with the remaining coordinates relaxed
// to the dilated bounding box, so the last interval is exact.
std::vector<LatticePoint> lattice_points(const HRep& h, Coord n);
std::vector<LatticePoint> lattice_points(const ConvexHull& hull, Coord n);

// Streams lattice points of n * P in lexicographic order without storing
// them. The span is valid only during the call.
using PointVisitor = std::function<void(std::span<const Coord>)>;
void for_each_lattice_point(const ConvexHull& hull, Coord n, const PointVisitor& visit);

// |nP cap Z^d|. Runs in time proportional to the number of last-coordinate
// intervals, not the number of points.
std::uint64_t count_lattice_points(const ConvexHull& hull, Coord n);
std::uint64_t count_lattice_points(const HRep& h, Coord n);

}  // namespace refpoly
