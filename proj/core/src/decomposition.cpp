#include "refpoly/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "refpoly/errors.hpp"

namespace refpoly {

namespace {

// Packs points of N * box(P) into 64-bit keys, one bit field per coordinate.
// The packing is affine, so key(x + y) = key(x) + key(y) - key(0) whenever
// x + y stays inside N * box(P).
class PointCodec {
 public:
  PointCodec(const std::vector<LatticePoint>& points, Coord max_dilation) {
    const std::size_t dim = points.front().size();
    offset_.resize(dim);
    shift_.resize(dim);
    int used = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      Coord lo = points.front()[j];
      Coord hi = lo;
      for (const auto& p : points) {
        lo = std::min(lo, p[j]);
        hi = std::max(hi, p[j]);
      }
      offset_[j] = checked_mul(lo, max_dilation);
      const auto span = static_cast<std::uint64_t>(checked_mul(hi - lo, max_dilation));
      shift_[j] = used;
      used += std::max(1, static_cast<int>(std::bit_width(span)));
    }
    if (used > 64) throw CapacityError("dilate too wide to pack into 64-bit keys");
    zero_ = encode_raw(std::vector<Coord>(dim, 0));
  }

  std::uint64_t encode(std::span<const Coord> p) const { return encode_raw(p); }
  // Key of a point of P, to be added to keys of points of the previous dilate.
  std::uint64_t relative(std::span<const Coord> p) const { return encode_raw(p) - zero_; }

 private:
  std::uint64_t encode_raw(std::span<const Coord> p) const {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      k += static_cast<std::uint64_t>(p[j] - offset_[j]) << shift_[j];
    }
    return k;
  }

  std::vector<Coord> offset_;
  std::vector<int> shift_;
  std::uint64_t zero_ = 0;
};

}  // namespace

IdpReport has_idp(const ConvexHull& hull, std::optional<int> bound) {
  const int d = hull.hrep.ambient_dim;
  const int limit = bound.value_or(std::max(2, d - 1));
  IdpReport report;
  report.checked_bound = limit;
  if (limit < 2) return report;

  const std::vector<LatticePoint> base = lattice_points(hull, 1);
  // S_n lies in n * box(P cap Z^d); the nP points may stick out of it, so the
  // codec is sized one step wider and out-of-box points are rejected first.
  std::vector<Coord> lo = base.front();
  std::vector<Coord> hi = base.front();
  for (const auto& p : base)
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  const PointCodec codec(base, limit);
  std::vector<std::uint64_t> steps;
  steps.reserve(base.size());
  for (const auto& p : base) steps.push_back(codec.relative(p));

  std::unordered_set<std::uint64_t> previous;
  for (const auto& p : base) previous.insert(codec.encode(p));
  for (int n = 2; n <= limit; ++n) {
    std::unordered_set<std::uint64_t> current;
    current.reserve(previous.size() * 4);
    for (std::uint64_t key : previous)
      for (std::uint64_t step : steps) current.insert(key + step);

    std::optional<LatticePoint> missing;
    std::uint64_t total = 0;
    for_each_lattice_point(hull, n, [&](std::span<const Coord> p) {
      ++total;
      if (missing) return;
      bool in_box = true;
      for (int j = 0; j < d && in_box; ++j) in_box = p[j] >= n * lo[j] && p[j] <= n * hi[j];
      if (!in_box || !current.contains(codec.encode(p))) missing.emplace(p.begin(), p.end());
    });
    if (missing) {
      report.holds = false;
      report.witness = DilatedPoint{n, std::move(*missing)};
      return report;
    }
    if (total != current.size()) {
      throw InconsistencyError("Minkowski sum produced points outside the dilate");
    }
    previous = std::move(current);
  }
  return report;
}

IdpReport has_idp(const VRep& p, std::optional<int> bound) { return has_idp(convex_hull(p), bound); }

namespace {

void require_induced_cycle(const Graph& g, const std::vector<int>& cycle_vertices, const char* what) {
  const std::size_t len = cycle_vertices.size();
  if (len < 5 || len % 2 == 0) {
    throw PreconditionError(std::string(what) + " must have odd length >= 5");
  }
  std::set<int> distinct(cycle_vertices.begin(), cycle_vertices.end());
  if (distinct.size() != len || *distinct.begin() < 1 || *distinct.rbegin() > g.vertex_count()) {
    throw PreconditionError(std::string(what) + " vertices must be distinct members of [d]");
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle_vertices[i], cycle_vertices[j]) != consecutive) {
        throw PreconditionError(std::string(what) + " is not an induced cycle in the given order");
      }
    }
  }
}

void require_dimension(const Graph& g1, int d) {
  if (d != g1.vertex_count()) throw PreconditionError("d must equal the vertex count of the graph");
}

}  // namespace

DilatedPoint odd_hole_witness(const Graph& g1, const std::vector<int>& hole, int d) {
  require_dimension(g1, d);
  require_induced_cycle(g1, hole, "odd hole");
  const int len = static_cast<int>(hole.size());
  const int ell = (len - 1) / 2;
  // Sum of v_i = rho(S_i) + e_{d+1} over the maximal stable sets
  // S_i = {i, i+2, ..., i+2(l-1)} (cycle positions mod 2l+1), minus e_{d+1}.
  LatticePoint sum(d + 1, 0);
  for (int i = 0; i < len; ++i) {
    for (int k = 0; k < ell; ++k) sum[hole[(i + 2 * k) % len] - 1] += 1;
    sum[d] += 1;
  }
  sum[d] -= 1;
  for (Coord& c : sum) {
    if (c % ell != 0) throw InconsistencyError("odd-hole combination is not divisible by l");
    c /= ell;
  }
  return DilatedPoint{3, std::move(sum)};
}

DilatedPoint odd_antihole_witness(const Graph& g1, const std::vector<int>& antihole, int d) {
  require_dimension(g1, d);
  require_induced_cycle(complement(g1), antihole, "odd antihole");
  const int len = static_cast<int>(antihole.size());
  const int ell = (len - 1) / 2;
  // w_i = e_{c_i} + e_{c_{i+1}} + e_{d+1}; b = (sum w_i - e_{d+1}) / 2.
  LatticePoint sum(d + 1, 0);
  for (int i = 0; i < len; ++i) {
    sum[antihole[i] - 1] += 1;
    sum[antihole[(i + 1) % len] - 1] += 1;
    sum[d] += 1;
  }
  sum[d] -= 1;
  for (Coord& c : sum) {
    if (c % 2 != 0) throw InconsistencyError("odd-antihole combination is not even");
    c /= 2;
  }
  return DilatedPoint{ell + 1, std::move(sum)};
}

namespace {

struct DecompositionSearch {
  const std::vector<LatticePoint>& pts;
  std::vector<std::vector<Coord>> suffix_min, suffix_max;
  std::vector<Coord> remaining;

  // Can `left` points with indices >= from sum to `remaining`?
  bool search(std::size_t from, Coord left) {
    const std::size_t dim = remaining.size();
    if (left == 0) {
      return std::all_of(remaining.begin(), remaining.end(), [](Coord c) { return c == 0; });
    }
    for (std::size_t i = from; i < pts.size(); ++i) {
      bool feasible = true;
      for (std::size_t j = 0; j < dim && feasible; ++j) {
        feasible = remaining[j] >= left * suffix_min[i][j] && remaining[j] <= left * suffix_max[i][j];
      }
      if (!feasible) continue;
      for (std::size_t j = 0; j < dim; ++j) remaining[j] -= pts[i][j];
      const bool found = search(i, left - 1);
      for (std::size_t j = 0; j < dim; ++j) remaining[j] += pts[i][j];
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

bool verify_witness(const ConvexHull& hull, Coord n, const LatticePoint& point) {
  const int d = hull.hrep.ambient_dim;
  if (n < 1) throw PreconditionError("dilation must be positive");
  if (static_cast<int>(point.size()) != d) throw DimensionError("witness dimension mismatch");
  for (const auto& f : hull.hrep.facets) {
    Coord s = 0;
    for (int j = 0; j < d; ++j) s = checked_add(s, checked_mul(f.normal[j], point[j]));
    if (s > checked_mul(f.offset, n)) throw PreconditionError("witness lies outside nP");
  }
  std::vector<LatticePoint> pts = lattice_points(hull, 1);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const LatticePoint& a, const LatticePoint& b) { return a.back() > b.back(); });
  DecompositionSearch s{pts, {}, {}, point};
  s.suffix_min.assign(pts.size() + 1, std::vector<Coord>(d, 0));
  s.suffix_max.assign(pts.size() + 1, std::vector<Coord>(d, 0));
  for (std::size_t i = pts.size(); i-- > 0;) {
    for (int j = 0; j < d; ++j) {
      const bool last = i + 1 == pts.size();
      s.suffix_min[i][j] = last ? pts[i][j] : std::min(pts[i][j], s.suffix_min[i + 1][j]);
      s.suffix_max[i][j] = last ? pts[i][j] : std::max(pts[i][j], s.suffix_max[i + 1][j]);
    }
  }
  return !s.search(0, n);
}

bool verify_witness(const VRep& p, Coord n, const LatticePoint& point) {
  return verify_witness(convex_hull(p), n, point);
}

}  // namespace refpoly
