#include "refpoly/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "refpoly/errors.hpp"

namespace refpoly {

Monomial Monomial::variable(std::size_t variables, std::size_t index) {
  Monomial m = one(variables);
  m.exponents.at(index) = 1;
  return m;
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exponents[i] += other.exponents[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exponents[i] -= other.exponents[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m.exponents[i] = std::min(a.exponents[i], b.exponents[i]);
  return m;
}

MonomialOrder::MonomialOrder(std::vector<std::size_t> ranking) : ranking_(std::move(ranking)) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw PreconditionError("variable ranking is not a permutation");
  }
}

MonomialOrder MonomialOrder::natural(std::size_t variables) {
  std::vector<std::size_t> r(variables);
  std::iota(r.begin(), r.end(), 0);
  return MonomialOrder(std::move(r));
}

MonomialOrder MonomialOrder::with_smallest(std::size_t index) const {
  std::vector<std::size_t> r;
  r.reserve(ranking_.size());
  for (std::size_t v : ranking_)
    if (v != index) r.push_back(v);
  r.push_back(index);
  return MonomialOrder(std::move(r));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t k = ranking_.size(); k-- > 0;) {
    const std::size_t v = ranking_[k];
    if (a.exponents[v] != b.exponents[v]) {
      // More of the smallest variable means smaller.
      return b.exponents[v] <=> a.exponents[v];
    }
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names.at(i);
    if (m.exponents[i] > 1) os << '^' << m.exponents[i];
  }
  return first ? "1" : os.str();
}

std::string to_string(const Binomial& b, const std::vector<std::string>& names) {
  return to_string(b.lead, names) + " - " + to_string(b.trail, names);
}

std::vector<std::string> default_names(std::size_t variables) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < variables; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace refpoly
