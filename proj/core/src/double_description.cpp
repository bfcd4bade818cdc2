#include "refpoly/double_description.hpp"

#include <algorithm>
#include <numeric>

#include "refpoly/errors.hpp"

namespace refpoly {

namespace {

Wide dot(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Wide term = 0;
    if (__builtin_mul_overflow(static_cast<Wide>(a[i]), static_cast<Wide>(b[i]), &term) ||
        __builtin_add_overflow(s, term, &s)) {
      throw CapacityError("inner product overflow in the double-description method");
    }
  }
  return s;
}

Wide gcd128(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// coef_pos * neg - coef_neg * pos, scaled to be primitive.
std::vector<Coord> combine(Wide coef_pos, const std::vector<Coord>& neg, Wide coef_neg,
                           const std::vector<Coord>& pos) {
  const Wide g = gcd128(coef_pos, coef_neg);
  coef_pos /= g;
  coef_neg /= g;
  std::vector<Wide> wide(neg.size());
  Wide content = 0;
  for (std::size_t i = 0; i < neg.size(); ++i) {
    Wide a = 0;
    Wide b = 0;
    if (__builtin_mul_overflow(coef_pos, static_cast<Wide>(neg[i]), &a) ||
        __builtin_mul_overflow(coef_neg, static_cast<Wide>(pos[i]), &b) ||
        __builtin_sub_overflow(a, b, &wide[i])) {
      throw CapacityError("ray combination overflow in the double-description method");
    }
    content = gcd128(content, wide[i]);
  }
  std::vector<Coord> out(neg.size());
  for (std::size_t i = 0; i < neg.size(); ++i) out[i] = narrow(content == 0 ? 0 : wide[i] / content);
  return out;
}

// Greedily picks rows until they span R^D.
std::vector<std::size_t> spanning_rows(const std::vector<std::vector<Coord>>& rows, std::size_t dim) {
  std::vector<std::size_t> chosen;
  QMatrix echelon;  // reduced copies of the chosen rows
  std::vector<std::size_t> pivot_col;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
    QVector v(rows[i].begin(), rows[i].end());
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (v[pivot_col[r]] == 0) continue;
      const mpq_class f = v[pivot_col[r]] / echelon[r][pivot_col[r]];
      for (std::size_t k = 0; k < dim; ++k) v[k] -= f * echelon[r][k];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
    if (nz == v.end()) continue;
    pivot_col.push_back(static_cast<std::size_t>(nz - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(i);
  }
  if (chosen.size() < dim) {
    throw DimensionError("constraint rows span a space of dimension " +
                         std::to_string(chosen.size()) + " < " + std::to_string(dim));
  }
  return chosen;
}

}  // namespace

ConeRays extreme_rays(const std::vector<std::vector<Coord>>& rows) {
  if (rows.empty()) throw DimensionError("no constraint rows");
  const std::size_t dim = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != dim) throw DimensionError("constraint rows have different lengths");
  }
  const std::size_t n = rows.size();
  const std::vector<std::size_t> basis = spanning_rows(rows, dim);

  ConeRays cone;
  // Initial simplicial cone: ray k is tight on every basis row except basis[k].
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<std::vector<Coord>> others;
    for (std::size_t j = 0; j < dim; ++j)
      if (j != k) others.push_back(rows[basis[j]]);
    QMatrix kernel = others.empty() ? QMatrix{QVector(1, 1)} : rational_kernel(to_rational(others), dim);
    std::vector<Coord> ray = primitive_integer(kernel.front());
    if (dot(ray, rows[basis[k]]) < 0)
      for (Coord& c : ray) c = -c;
    Incidence zero(n);
    for (std::size_t j = 0; j < dim; ++j)
      if (j != k) zero.set(basis[j]);
    cone.rays.push_back(std::move(ray));
    cone.incidence.push_back(std::move(zero));
  }

  std::vector<bool> in_basis(n, false);
  for (std::size_t b : basis) in_basis[b] = true;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_basis[i]) order.push_back(i);

  for (std::size_t row : order) {
    const auto& g = rows[row];
    std::vector<Wide> value(cone.rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t k = 0; k < cone.rays.size(); ++k) {
      value[k] = dot(cone.rays[k], g);
      if (value[k] > 0) {
        pos.push_back(k);
      } else if (value[k] < 0) {
        neg.push_back(k);
      } else {
        cone.incidence[k].set(row);
      }
    }
    if (neg.empty()) continue;

    ConeRays next;
    for (std::size_t k = 0; k < cone.rays.size(); ++k) {
      if (value[k] >= 0) {
        next.rays.push_back(cone.rays[k]);
        next.incidence.push_back(cone.incidence[k]);
      }
    }
    Incidence common(n);
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        common = cone.incidence[p];
        common &= cone.incidence[q];
        // Adjacent rays share at least D-2 tight rows ...
        if (common.count() + 2 < dim) continue;
        // ... and no third ray is tight on all of them.
        bool adjacent = true;
        for (std::size_t k = 0; k < cone.rays.size() && adjacent; ++k) {
          if (k != p && k != q && common.is_subset_of(cone.incidence[k])) adjacent = false;
        }
        if (!adjacent) continue;
        next.rays.push_back(combine(value[p], cone.rays[q], value[q], cone.rays[p]));
        common.set(row);
        next.incidence.push_back(common);
      }
    }
    cone = std::move(next);
  }
  return cone;
}

}  // namespace refpoly
