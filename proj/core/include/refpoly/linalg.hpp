#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace refpoly {

using Coord = std::int64_t;
// Intermediate width for overflow-checked products.
__extension__ typedef __int128 Wide;
using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>;
using ZVector = std::vector<mpz_class>;
using ZMatrix = std::vector<ZVector>;

QMatrix to_rational(const std::vector<std::vector<Coord>>& rows);

// Rank over Q by Gaussian elimination.
std::size_t rank(QMatrix rows);

// Basis of {x : rows * x = 0} over Q; columns = row length.
QMatrix rational_kernel(QMatrix rows, std::size_t columns);

// Basis of the integer lattice {x in Z^n : rows * x = 0}, via a unimodular
// row reduction of [rows^T | I]. The basis is pairwise size-reduced in the
// l1 norm, which keeps the binomials built from it low-degree.
std::vector<std::vector<Coord>> integer_kernel(const std::vector<std::vector<Coord>>& rows,
                                               std::size_t columns);

// Scales a nonzero rational vector to the primitive integer vector with the
// same direction. Throws CapacityError if an entry leaves int64 range.
std::vector<Coord> primitive_integer(const QVector& v);

Coord gcd_of(std::span<const Coord> v);

// Overflow-checked helpers; throw CapacityError instead of wrapping.
Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);
Coord narrow(Wide v);
Coord narrow(const mpz_class& v);

}  // namespace refpoly
