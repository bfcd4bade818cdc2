#include "refpoly/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "refpoly/errors.hpp"

namespace refpoly {

QMatrix to_rational(const std::vector<std::vector<Coord>>& rows) {
  QMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    QVector q;
    q.reserve(row.size());
    for (Coord c : row) q.emplace_back(static_cast<long>(c));
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const mpq_class inv = 1 / m[r][c];
    for (std::size_t k = c; k < columns; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t k = c; k < columns; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return rref(rows, columns).size();
}

QMatrix rational_kernel(QMatrix rows, std::size_t columns) {
  const std::vector<std::size_t> pivots = rref(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  QMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    QVector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Coord narrow(Wide v) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min()) {
    throw CapacityError("integer value exceeds the 64-bit coordinate range");
  }
  return static_cast<Coord>(v);
}

Coord narrow(const mpz_class& v) {
  if (!v.fits_slong_p()) throw CapacityError("integer value exceeds the 64-bit coordinate range");
  return static_cast<Coord>(v.get_si());
}

Coord checked_add(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("integer overflow in addition");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("integer overflow in multiplication");
  return r;
}

Coord gcd_of(std::span<const Coord> v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, c);
  return g;
}

std::vector<Coord> primitive_integer(const QVector& v) {
  mpz_class lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  ZVector z;
  z.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class e = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    z.push_back(std::move(e));
  }
  if (g == 0) throw PreconditionError("cannot scale the zero vector");
  std::vector<Coord> out;
  out.reserve(z.size());
  for (auto& e : z) out.push_back(narrow(mpz_class(e / g)));
  return out;
}

namespace {

Coord l1(const std::vector<Coord>& v) {
  Coord s = 0;
  for (Coord c : v) s = checked_add(s, c < 0 ? -c : c);
  return s;
}

// Greedy pairwise reduction: replace v_i by v_i +- v_j while that lowers the
// l1 norm. Preserves the lattice spanned.
void size_reduce(std::vector<std::vector<Coord>>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          std::vector<Coord> t = basis[i];
          for (std::size_t k = 0; k < t.size(); ++k) t[k] = checked_add(t[k], sign * basis[j][k]);
          if (l1(t) < l1(basis[i])) {
            basis[i] = std::move(t);
            changed = true;
          }
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    return std::pair(l1(a), a) < std::pair(l1(b), b);
  });
}

}  // namespace

std::vector<std::vector<Coord>> integer_kernel(const std::vector<std::vector<Coord>>& rows,
                                               std::size_t columns) {
  const std::size_t r = rows.size();
  // Row k of `work` is [column k of rows | e_k].
  ZMatrix work(columns, ZVector(r + columns, 0));
  for (std::size_t k = 0; k < columns; ++k) {
    for (std::size_t i = 0; i < r; ++i) work[k][i] = static_cast<long>(rows[i][k]);
    work[k][r + k] = 1;
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r && lead < columns; ++c) {
    // Euclid on column c among rows lead..end until one nonzero remains.
    while (true) {
      std::size_t best = columns;
      for (std::size_t k = lead; k < columns; ++k) {
        if (work[k][c] != 0 && (best == columns || abs(work[k][c]) < abs(work[best][c]))) best = k;
      }
      if (best == columns) break;
      std::swap(work[lead], work[best]);
      bool done = true;
      for (std::size_t k = lead + 1; k < columns; ++k) {
        if (work[k][c] == 0) continue;
        const mpz_class q = work[k][c] / work[lead][c];
        for (std::size_t t = 0; t < r + columns; ++t) work[k][t] -= q * work[lead][t];
        if (work[k][c] != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<Coord>> basis;
  for (std::size_t k = lead; k < columns; ++k) {
    std::vector<Coord> v(columns);
    for (std::size_t t = 0; t < columns; ++t) v[t] = narrow(work[k][r + t]);
    basis.push_back(std::move(v));
  }
  size_reduce(basis);
  return basis;
}

}  // namespace refpoly
