#pragma once

#include "refpoly/geometry.hpp"
#include "refpoly/graph.hpp"

namespace refpoly {

// rho(W) for every stable set W, in canonical stable-set order (origin last).
VRep stable_set_polytope(const Graph& g);

// conv(P u -Q): the points of p followed by the negated points of q, with
// repeats dropped (the first occurrence is kept).
VRep gamma(const VRep& p, const VRep& q);

// conv(P x {1} u -Q x {-1}) in dimension d+1; p-block first.
VRep omega(const VRep& p, const VRep& q);

// omega(Q_G, Q_G).
VRep hansen(const Graph& g);

// conv(P x {0} u {e_{d+1}, -e_{d+1}}).
VRep bipyramid(const VRep& p);

// Convenience: Gamma(Q_G1, Q_G2) and Omega(Q_G1, Q_G2). Throws InputError
// if the vertex counts differ.
VRep gamma_of_graphs(const Graph& g1, const Graph& g2);
VRep omega_of_graphs(const Graph& g1, const Graph& g2);

}  // namespace refpoly
