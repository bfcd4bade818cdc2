#include <algorithm>
#include <cstdlib>
#include <limits>

#include "refpoly/errors.hpp"
#include "refpoly/geometry.hpp"

namespace refpoly {

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Depth-first walk over coordinate prefixes of the lattice points of n * P.
// At each level the next coordinate is bounded by every facet, with the
// coordinates still to come relaxed to the dilated bounding box.
class PrefixWalker {
 public:
  PrefixWalker(const HRep& h, Coord n, const std::vector<RationalPoint>& vertices)
      : dim_(h.ambient_dim), facets_(h.facets.size()) {
    if (n < 1) throw PreconditionError("dilation factor must be positive");
    if (vertices.empty()) throw DimensionError("polytope has no vertices");
    lo_.assign(dim_, 0);
    hi_.assign(dim_, 0);
    for (int j = 0; j < dim_; ++j) {
      mpq_class mn = vertices.front()[j];
      mpq_class mx = mn;
      for (const auto& p : vertices) {
        mn = std::min(mn, p[j]);
        mx = std::max(mx, p[j]);
      }
      lo_[j] = narrow(mpz_class(ceil_q(mn * static_cast<long>(n))));
      hi_[j] = narrow(mpz_class(floor_q(mx * static_cast<long>(n))));
    }
    normals_.resize(facets_ * dim_);
    rhs_.resize(facets_);
    constexpr Coord kLimit = Coord{1} << 61;
    for (std::size_t f = 0; f < facets_; ++f) {
      const Facet& facet = h.facets[f];
      if (static_cast<int>(facet.normal.size()) != dim_) throw DimensionError("facet length mismatch");
      rhs_[f] = checked_mul(facet.offset, n);
      Coord magnitude = std::abs(rhs_[f]);
      for (int j = 0; j < dim_; ++j) {
        normals_[f * dim_ + j] = facet.normal[j];
        const Coord reach = std::max(std::abs(lo_[j]), std::abs(hi_[j]));
        magnitude = checked_add(magnitude, checked_mul(std::abs(facet.normal[j]), reach));
      }
      if (magnitude >= kLimit) throw CapacityError("dilate too large for 64-bit enumeration");
    }
    // rest_[k * F + f]: least value of sum_{j>k} a_fj x_j over the box.
    rest_.assign(static_cast<std::size_t>(dim_) * facets_, 0);
    for (std::size_t f = 0; f < facets_; ++f) {
      Coord acc = 0;
      for (int k = dim_ - 1; k >= 0; --k) {
        rest_[k * facets_ + f] = acc;
        const Coord a = normals_[f * dim_ + k];
        acc += std::min(a * lo_[k], a * hi_[k]);
      }
    }
    slack_.assign(static_cast<std::size_t>(dim_ + 1) * facets_, 0);
    std::copy(rhs_.begin(), rhs_.end(), slack_.begin());
    point_.assign(dim_, 0);
  }

  // visit(prefix_and_scratch, lo, hi): point_[0..dim-1) fixed, last
  // coordinate ranges over [lo, hi].
  template <typename RangeVisitor>
  void run(RangeVisitor&& visit) {
    walk(0, visit);
  }

  std::span<Coord> point() { return point_; }

 private:
  template <typename RangeVisitor>
  void walk(int k, RangeVisitor& visit) {
    Coord low = lo_[k];
    Coord high = hi_[k];
    const Coord* slack = &slack_[k * facets_];
    const Coord* rest = &rest_[k * facets_];
    for (std::size_t f = 0; f < facets_ && low <= high; ++f) {
      const Coord a = normals_[f * dim_ + k];
      const Coord r = slack[f] - rest[f];
      if (a > 0) {
        high = std::min(high, floor_div(r, a));
      } else if (a < 0) {
        low = std::max(low, ceil_div(r, a));
      } else if (r < 0) {
        return;
      }
    }
    if (low > high) return;
    if (k == dim_ - 1) {
      visit(low, high);
      return;
    }
    Coord* next = &slack_[(k + 1) * facets_];
    for (Coord v = low; v <= high; ++v) {
      point_[k] = v;
      for (std::size_t f = 0; f < facets_; ++f) next[f] = slack[f] - normals_[f * dim_ + k] * v;
      walk(k + 1, visit);
    }
  }

  int dim_;
  std::size_t facets_;
  std::vector<Coord> lo_, hi_;
  std::vector<Coord> normals_;
  std::vector<Coord> rhs_;
  std::vector<Coord> rest_;
  std::vector<Coord> slack_;
  std::vector<Coord> point_;
};

std::vector<RationalPoint> rational_vertices(const ConvexHull& hull) {
  std::vector<RationalPoint> out;
  for (const auto& p : hull.vertices.points()) {
    RationalPoint q;
    for (Coord c : p) q.emplace_back(static_cast<long>(c));
    out.push_back(std::move(q));
  }
  return out;
}

void stream(PrefixWalker& walker, const PointVisitor& visit) {
  std::span<Coord> p = walker.point();
  walker.run([&](Coord low, Coord high) {
    for (Coord v = low; v <= high; ++v) {
      p.back() = v;
      visit(p);
    }
  });
}

std::vector<LatticePoint> collect(PrefixWalker& walker) {
  std::vector<LatticePoint> out;
  stream(walker, [&](std::span<const Coord> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

std::uint64_t count(PrefixWalker& walker) {
  std::uint64_t total = 0;
  walker.run([&](Coord low, Coord high) { total += static_cast<std::uint64_t>(high - low + 1); });
  return total;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const HRep& h, Coord n) {
  PrefixWalker walker(h, n, vertices_of(h));
  return collect(walker);
}

std::vector<LatticePoint> lattice_points(const ConvexHull& hull, Coord n) {
  PrefixWalker walker(hull.hrep, n, rational_vertices(hull));
  return collect(walker);
}

void for_each_lattice_point(const ConvexHull& hull, Coord n, const PointVisitor& visit) {
  PrefixWalker walker(hull.hrep, n, rational_vertices(hull));
  stream(walker, visit);
}

std::uint64_t count_lattice_points(const ConvexHull& hull, Coord n) {
  PrefixWalker walker(hull.hrep, n, rational_vertices(hull));
  return count(walker);
}

std::uint64_t count_lattice_points(const HRep& h, Coord n) {
  PrefixWalker walker(h, n, vertices_of(h));
  return count(walker);
}

}  // namespace refpoly
