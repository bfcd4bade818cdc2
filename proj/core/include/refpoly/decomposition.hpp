#pragma once

#include <optional>
#include <vector>

#include "refpoly/geometry.hpp"
#include "refpoly/graph.hpp"

namespace refpoly {

// A lattice point of n * P, typically one that is not a sum of n lattice
// points of P.
struct DilatedPoint {
  Coord n = 0;
  LatticePoint point;

  friend bool operator==(const DilatedPoint&, const DilatedPoint&) = default;
};

struct IdpReport {
  bool holds = true;
  int checked_bound = 0;
  std::optional<DilatedPoint> witness;  // present iff !holds
};

// Builds S_n = S_{n-1} + S_1 from S_1 = P cap Z^d and compares it with the
// lattice points of nP for n = 2..bound. The default bound is max(2, d-1),
// which suffices because every lattice point of (k+1)P with k >= d-1 is a
// lattice point of kP plus one of P. Stops at the first n that fails; the
// witness is the lexicographically first undecomposed point of nP.
IdpReport has_idp(const ConvexHull& hull, std::optional<int> bound = std::nullopt);
IdpReport has_idp(const VRep& p, std::optional<int> bound = std::nullopt);

// For an odd hole c_1..c_{2l+1} of g1: the point e_{c_1}+...+e_{c_{2l+1}}
// + 2 e_{d+1} of 3 * Omega(Q_G1, Q_G2), assembled from the l-element
// maximal stable sets of the hole. Throws PreconditionError unless `hole`
// is an induced odd cycle of g1 of length >= 5 in cycle order, or d differs
// from the vertex count of g1.
DilatedPoint odd_hole_witness(const Graph& g1, const std::vector<int>& hole, int d);

// For an odd antihole of g1, listed in the cycle order of its complement:
// the point e_{c_1}+...+e_{c_{2l+1}} + l e_{d+1} of (l+1) * Omega(Q_G1, Q_G2),
// assembled from the complement's edges.
DilatedPoint odd_antihole_witness(const Graph& g1, const std::vector<int>& antihole, int d);

// True iff no multiset of n lattice points of P sums to `point`. Throws
// PreconditionError if the point is outside nP.
bool verify_witness(const VRep& p, Coord n, const LatticePoint& point);
bool verify_witness(const ConvexHull& hull, Coord n, const LatticePoint& point);

}  // namespace refpoly
