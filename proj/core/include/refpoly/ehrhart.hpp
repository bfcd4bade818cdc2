#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "refpoly/geometry.hpp"
#include "refpoly/graph.hpp"

namespace refpoly {

// delta_0 + delta_1 t + ... + delta_dim t^dim of a dim-dimensional lattice
// polytope. Coefficients are stored lowest degree first.
class DeltaPolynomial {
 public:
  DeltaPolynomial(std::vector<mpz_class> coeffs, int dim);
  // Convenience for literals in tests and golden data.
  static DeltaPolynomial from(std::initializer_list<long> coeffs, int dim);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  int dim() const { return dim_; }
  // Index of the last nonzero coefficient, -1 for the zero polynomial.
  int degree() const;
  mpz_class at_one() const;

  // (1 + t) * this, as a polynomial of a (dim+1)-dimensional polytope.
  DeltaPolynomial times_one_plus_t() const;

  // "1+15t+60t^2"
  std::string to_string() const;

  // Polynomial equality; trailing zeros and dim are ignored.
  friend bool operator==(const DeltaPolynomial& a, const DeltaPolynomial& b);

 private:
  std::vector<mpz_class> coeffs_;
  int dim_;
};

std::uint64_t count_dilate(const ConvexHull& hull, Coord n);
std::uint64_t count_dilate(const VRep& p, Coord n);

// From L(1..dim) via delta_i = sum_j (-1)^(i-j) C(dim+1, i-j) L(j), L(0)=1.
// The same sum at i = dim+1, which also uses L(dim+1), must vanish and every delta_i must be
// nonnegative; otherwise InconsistencyError.
DeltaPolynomial delta_polynomial(const ConvexHull& hull);
DeltaPolynomial delta_polynomial(const VRep& p);

mpz_class normalized_volume(const DeltaPolynomial& delta);
mpz_class normalized_volume(const VRep& p);

bool is_palindromic(const DeltaPolynomial& delta);

struct DeltaTheoremReport {
  bool g1_perfect = false;
  bool g2_perfect = false;
  bool hypothesis_holds = false;  // both perfect

  DeltaPolynomial delta_gamma;            // Gamma(Q_G1, Q_G2)
  DeltaPolynomial delta_omega;            // Omega(Q_G1, Q_G2)
  DeltaPolynomial delta_gamma_suspended;  // Gamma over the suspensions
  DeltaPolynomial delta_gamma_lifted;     // (1 + t) * delta_gamma

  bool omega_matches_suspended = false;
  bool omega_matches_lifted = false;

  mpz_class volume_gamma;
  mpz_class volume_omega;
  mpz_class volume_gamma_suspended;
  // vol(Omega) == vol(Gamma over suspensions) == 2 vol(Gamma)
  bool volume_ratio_two = false;

  // Identity holds, or the hypothesis fails.
  bool consistent() const;
};

DeltaTheoremReport verify_delta_theorem(const Graph& g1, const Graph& g2);

}  // namespace refpoly
