#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace refpoly {

struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t variables) { return Monomial(std::vector<int>(variables, 0)); }
  static Monomial variable(std::size_t variables, std::size_t index);

  std::size_t size() const { return exponents.size(); }
  int degree() const;
  bool divides(const Monomial& other) const;
  bool is_squarefree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order. ranking lists variable indices from
// largest to smallest; ties of total degree go to the monomial with the
// smaller exponent on the smallest variable where the two differ.
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<std::size_t> ranking);
  // x_0 > x_1 > ... > x_{n-1}.
  static MonomialOrder natural(std::size_t variables);

  const std::vector<std::size_t>& ranking() const { return ranking_; }
  std::size_t variables() const { return ranking_.size(); }
  std::size_t smallest() const { return ranking_.back(); }

  // Same relative ranking, with `index` moved to the bottom.
  MonomialOrder with_smallest(std::size_t index) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  std::vector<std::size_t> ranking_;
};

// lead - trail with lead > trail in the order it was built for.
struct Binomial {
  Monomial lead;
  Monomial trail;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

std::string to_string(const Monomial& m, const std::vector<std::string>& names);
std::string to_string(const Binomial& b, const std::vector<std::string>& names);
// x1, x2, ... as default variable names.
std::vector<std::string> default_names(std::size_t variables);

}  // namespace refpoly
