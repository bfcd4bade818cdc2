#pragma once

#include <vector>

#include "refpoly/monomial.hpp"

namespace refpoly {

// Pure difference binomials x^u - x^v with +-1 coefficients; the ideals
// handled here are generated by such binomials, so the field never enters.

// Orients {u, v} as lead > trail; returns false if u == v (the zero binomial).
bool orient(Monomial u, Monomial v, const MonomialOrder& order, Binomial& out);

// Normal form of a monomial modulo a set of binomials: repeatedly rewrites
// a divisible monomial lead * r to trail * r. For a binomial ideal the
// normal form of a monomial is again a monomial.
Monomial normal_form(Monomial m, const std::vector<Binomial>& basis, const MonomialOrder& order);

// True iff u - v reduces to zero, i.e. both monomials share a normal form.
bool reduces_to_zero(const Monomial& u, const Monomial& v, const std::vector<Binomial>& basis,
                     const MonomialOrder& order);

// Reduced Groebner basis of the ideal generated by `generators`, via
// Buchberger's algorithm with the normal selection strategy and the
// coprime-leads criterion. Output sorted by (degree of lead, order on lead).
std::vector<Binomial> groebner_basis(const std::vector<Binomial>& generators,
                                     const MonomialOrder& order);

// Every S-binomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Binomial>& basis, const MonomialOrder& order);

// No lead divides any monomial of another element; leads are not divisible
// by each other and trails are irreducible.
bool is_reduced(const std::vector<Binomial>& basis, const MonomialOrder& order);

}  // namespace refpoly
