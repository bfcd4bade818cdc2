#pragma once

#include <optional>
#include <vector>

#include "refpoly/geometry.hpp"
#include "refpoly/graph.hpp"
#include "refpoly/groebner.hpp"
#include "refpoly/monomial.hpp"

namespace refpoly {

// Integer matrix stored by columns; column j is the exponent of t in the
// image t^{a_j} s of variable j. Columns are distinct.
class PointConfiguration {
 public:
  // Throws DimensionError on ragged columns and PreconditionError on a
  // repeated column.
  PointConfiguration(int rows, std::vector<std::vector<Coord>> columns);

  int rows() const { return rows_; }
  std::size_t size() const { return columns_.size(); }
  const std::vector<std::vector<Coord>>& columns() const { return columns_; }
  const std::vector<Coord>& column(std::size_t j) const { return columns_[j]; }

  bool is_nonnegative() const;
  bool has_zero_column() const;
  bool last_column_is_zero() const;

  // Image of a monomial under x_j -> t^{a_j} s: (A * u, deg u).
  std::vector<Coord> image(const Monomial& m) const;

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  int rows_;
  std::vector<std::vector<Coord>> columns_;
};

// Columns rho(W) in canonical stable-set order; the zero column is last.
PointConfiguration stable_set_configuration(const Graph& g);

// Both configurations nonnegative, containing the zero column, and for every
// pair of columns a, b the parts (a-b)^+ and (a-b)^- are columns of A and B.
// Throws PreconditionError if a zero column is missing or the row counts
// differ.
bool harmony(const PointConfiguration& a, const PointConfiguration& b);

// [-B, A]*: columns (-b_j, -1) for each b_j, then (a_i, 1), then 0.
// Variable layout: y_1..y_m at 0..m-1, x_1..x_n at m..m+n-1, z last.
PointConfiguration omega_matrix(const PointConfiguration& a, const PointConfiguration& b);

// u - v lies in the toric ideal.
bool is_toric_binomial(const PointConfiguration& config, const Binomial& f);

// Generators of the toric ideal: binomials of an integer kernel basis,
// saturated by every variable in turn.
std::vector<Binomial> toric_ideal_generators(const PointConfiguration& config);

// Reduced Groebner basis of the toric ideal under `order`.
std::vector<Binomial> toric_groebner(const PointConfiguration& config, const MonomialOrder& order);

// Leads of a reduced basis, sorted increasingly in `order`.
std::vector<Monomial> initial_ideal_min_gens(const std::vector<Binomial>& gb,
                                             const MonomialOrder& order);
bool is_squarefree(const std::vector<Monomial>& monomials);

struct CanonicalOrders {
  MonomialOrder a;         // on x_1..x_n, x_n smallest
  MonomialOrder b;         // on y_1..y_m, y_m smallest
  MonomialOrder combined;  // y_1 > ... > y_m > x_1 > ... > x_n > z
};

// Orders ranking variables by column position. Throws PreconditionError if
// a last column is not zero or some later column dominates an earlier one
// componentwise.
CanonicalOrders canonical_orders(const PointConfiguration& a, const PointConfiguration& b);

// {x_n y_m} u {x_i y_j : supp a_i meets supp b_j} u M_A u M_B in the
// combined ring, sorted increasingly in the combined order. Throws
// PreconditionError if in(I_A) or in(I_B) is not squarefree.
std::vector<Monomial> predicted_initial_gens(const PointConfiguration& a,
                                             const PointConfiguration& b);

// Every facet of conv(points) has lattice width one on the points: the
// values of a primitive facet normal lie in {offset-1, offset}.
bool is_compressed_geometric(const VRep& points);
// Squarefree initial ideal under every graded reverse-lex order. Throws
// CapacityError above 6 columns.
bool is_compressed_bruteforce(const PointConfiguration& config);

struct SquarefreeTheoremReport {
  bool harmony = false;
  bool a_squarefree = false;
  bool b_squarefree = false;
  bool hypotheses_hold = false;
  std::vector<Monomial> computed;  // minimal generators of in(I_[-B,A]*)
  bool computed_squarefree = false;
  std::optional<std::vector<Monomial>> predicted;  // iff hypotheses hold
  bool matches_prediction = false;
  std::optional<bool> omega_reflexive;
  std::optional<bool> omega_idp;
  std::size_t variables = 0;

  // Hypotheses imply squarefree, predicted generators, and (when measured)
  // a reflexive Omega with IDP; a squarefree computed ideal implies the
  // same geometry.
  bool consistent() const;
};

struct SquarefreeOptions {
  bool check_geometry = true;
  std::optional<int> idp_bound;
};

SquarefreeTheoremReport verify_squarefree_theorem(const Graph& g1, const Graph& g2,
                                                  const SquarefreeOptions& options = {});

}  // namespace refpoly
