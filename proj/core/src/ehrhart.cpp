#include "refpoly/ehrhart.hpp"

#include <sstream>

#include "refpoly/constructions.hpp"
#include "refpoly/errors.hpp"

namespace refpoly {

DeltaPolynomial::DeltaPolynomial(std::vector<mpz_class> coeffs, int dim)
    : coeffs_(std::move(coeffs)), dim_(dim) {
  if (dim_ < 0) throw PreconditionError("negative dimension");
  if (static_cast<int>(coeffs_.size()) > dim_ + 1) {
    for (std::size_t i = dim_ + 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) throw PreconditionError("delta-polynomial degree exceeds the dimension");
    }
  }
  coeffs_.resize(dim_ + 1, 0);
}

DeltaPolynomial DeltaPolynomial::from(std::initializer_list<long> coeffs, int dim) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return DeltaPolynomial(std::move(c), dim);
}

int DeltaPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
    if (coeffs_[i] != 0) return i;
  return -1;
}

mpz_class DeltaPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

DeltaPolynomial DeltaPolynomial::times_one_plus_t() const {
  std::vector<mpz_class> out(coeffs_.size() + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] += coeffs_[i];
    out[i + 1] += coeffs_[i];
  }
  return DeltaPolynomial(std::move(out), dim_ + 1);
}

std::string DeltaPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

bool operator==(const DeltaPolynomial& a, const DeltaPolynomial& b) {
  const int deg = a.degree();
  if (deg != b.degree()) return false;
  for (int i = 0; i <= deg; ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::uint64_t count_dilate(const ConvexHull& hull, Coord n) { return count_lattice_points(hull, n); }

std::uint64_t count_dilate(const VRep& p, Coord n) { return count_dilate(convex_hull(p), n); }

DeltaPolynomial delta_polynomial(const ConvexHull& hull) {
  const int dim = hull.hrep.ambient_dim;
  // L(dim+1) feeds only the vanishing check at index dim+1.
  std::vector<mpz_class> counts(dim + 2);
  counts[0] = 1;
  for (int j = 1; j <= dim + 1; ++j) {
    counts[j] = static_cast<unsigned long>(count_dilate(hull, j));
  }
  // The i-th coefficient of (1-t)^(dim+1) * sum_j L(j) t^j.
  auto coefficient = [&](int i) {
    mpz_class s = 0;
    for (int j = std::max(0, i - (dim + 1)); j <= i; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), dim + 1, i - j);
      if ((i - j) % 2 == 0) {
        s += binom * counts[j];
      } else {
        s -= binom * counts[j];
      }
    }
    return s;
  };
  std::vector<mpz_class> delta(dim + 1);
  for (int i = 0; i <= dim; ++i) {
    delta[i] = coefficient(i);
    if (delta[i] < 0) {
      throw InconsistencyError("negative delta coefficient at index " + std::to_string(i));
    }
  }
  if (coefficient(dim + 1) != 0) {
    throw InconsistencyError("delta transform does not vanish at index dim+1");
  }
  return DeltaPolynomial(std::move(delta), dim);
}

DeltaPolynomial delta_polynomial(const VRep& p) { return delta_polynomial(convex_hull(p)); }

mpz_class normalized_volume(const DeltaPolynomial& delta) { return delta.at_one(); }

mpz_class normalized_volume(const VRep& p) { return normalized_volume(delta_polynomial(p)); }

// Symmetric about dim/2, so a degree below dim never qualifies.
bool is_palindromic(const DeltaPolynomial& delta) {
  const auto& c = delta.coeffs();
  const int dim = delta.dim();
  auto at = [&](int i) { return i < static_cast<int>(c.size()) ? c[i] : mpz_class(0); };
  if (delta.degree() > dim) return false;
  for (int i = 0; i <= dim; ++i)
    if (at(i) != at(dim - i)) return false;
  return true;
}

bool DeltaTheoremReport::consistent() const {
  return !hypothesis_holds || (omega_matches_suspended && omega_matches_lifted && volume_ratio_two);
}

DeltaTheoremReport verify_delta_theorem(const Graph& g1, const Graph& g2) {
  const DeltaPolynomial delta_gamma = delta_polynomial(gamma_of_graphs(g1, g2));
  const DeltaPolynomial delta_omega = delta_polynomial(omega_of_graphs(g1, g2));
  const DeltaPolynomial delta_suspended =
      delta_polynomial(gamma_of_graphs(suspension(g1), suspension(g2)));
  DeltaTheoremReport r{
      .g1_perfect = is_perfect_spgt(g1),
      .g2_perfect = is_perfect_spgt(g2),
      .hypothesis_holds = false,
      .delta_gamma = delta_gamma,
      .delta_omega = delta_omega,
      .delta_gamma_suspended = delta_suspended,
      .delta_gamma_lifted = delta_gamma.times_one_plus_t(),
      .omega_matches_suspended = false,
      .omega_matches_lifted = false,
      .volume_gamma = 0,
      .volume_omega = 0,
      .volume_gamma_suspended = 0,
      .volume_ratio_two = false,
  };
  r.hypothesis_holds = r.g1_perfect && r.g2_perfect;
  r.omega_matches_suspended = r.delta_omega == r.delta_gamma_suspended;
  r.omega_matches_lifted = r.delta_omega == r.delta_gamma_lifted;
  r.volume_gamma = normalized_volume(r.delta_gamma);
  r.volume_omega = normalized_volume(r.delta_omega);
  r.volume_gamma_suspended = normalized_volume(r.delta_gamma_suspended);
  r.volume_ratio_two = r.volume_omega == r.volume_gamma_suspended &&
                       r.volume_omega == 2 * r.volume_gamma;
  return r;
}

}  // namespace refpoly
