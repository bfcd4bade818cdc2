#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "refpoly/linalg.hpp"

namespace refpoly::oracle {

namespace {

Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::set<Facet> facets(const VRep& v) {
  const int d = v.ambient_dim();
  const auto& pts = v.points();
  std::set<Facet> out;
  subsets(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Coord>> diffs;
    for (std::size_t t = 1; t < idx.size(); ++t) {
      std::vector<Coord> row(d);
      for (int k = 0; k < d; ++k) row[k] = pts[idx[t]][k] - pts[idx[0]][k];
      diffs.push_back(row);
    }
    QMatrix rows = to_rational(diffs);
    if (d == 1) rows.clear();
    const QMatrix ker = rational_kernel(rows, d);
    if (ker.size() != 1) return;
    std::vector<Coord> normal = primitive_integer(ker[0]);
    const Coord b = dot(normal, pts[idx[0]]);
    bool below = true, above = true;
    for (const auto& p : pts) {
      const Coord s = dot(normal, p);
      below = below && s <= b;
      above = above && s >= b;
    }
    if (above && !below) {
      for (auto& x : normal) x = -x;
      out.insert(Facet{normal, -b});
    } else if (below && !above) {
      out.insert(Facet{normal, b});
    }
  });
  return out;
}

std::vector<LatticePoint> box_points(const VRep& v, Coord n) {
  const int d = v.ambient_dim();
  const auto fs = facets(v);
  std::vector<Coord> lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    lo[k] = hi[k] = v.points()[0][k];
    for (const auto& p : v.points()) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
    lo[k] *= n;
    hi[k] *= n;
  }
  std::vector<LatticePoint> out;
  LatticePoint x(lo);
  while (true) {
    bool inside = true;
    for (const auto& f : fs) inside = inside && dot(f.normal, x) <= n * f.offset;
    if (inside) out.push_back(x);
    int k = d - 1;
    while (k >= 0 && x[k] == hi[k]) {
      x[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++x[k];
  }
  return out;
}

bool decomposes_up_to(const VRep& v, Coord n) {
  std::vector<std::set<LatticePoint>> layers(n + 1);
  for (Coord k = 1; k <= n; ++k) {
    const auto pts = box_points(v, k);
    layers[k] = std::set<LatticePoint>(pts.begin(), pts.end());
  }
  const auto& base = layers[1];
  std::map<std::pair<Coord, LatticePoint>, bool> memo;
  std::function<bool(Coord, const LatticePoint&)> splits = [&](Coord k, const LatticePoint& x) {
    if (k == 1) return base.contains(x);
    const auto key = std::pair(k, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& q : base) {
      LatticePoint rest(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) rest[i] = x[i] - q[i];
      if (layers[k - 1].contains(rest) && splits(k - 1, rest)) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };
  for (Coord k = 2; k <= n; ++k)
    for (const auto& x : layers[k])
      if (!splits(k, x)) return false;
  return true;
}

bool has_odd_hole_by_subsets(const Graph& g) {
  const int d = g.vertex_count();
  for (VertexMask m = 0; m < (VertexMask{1} << d); ++m) {
    const int size = std::popcount(m);
    if (size < 5 || size % 2 == 0) continue;
    std::vector<int> vs;
    for (int i = 1; i <= d; ++i)
      if (m & (VertexMask{1} << (i - 1))) vs.push_back(i);
    // An induced cycle: connected and every vertex has induced degree 2.
    bool two_regular = true;
    for (int u : vs) {
      int deg = 0;
      for (int w : vs) deg += (u != w && g.adjacent(u, w)) ? 1 : 0;
      two_regular = two_regular && deg == 2;
    }
    if (!two_regular) continue;
    std::set<int> seen{vs[0]};
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : vs)
        if (g.adjacent(u, w) && seen.insert(w).second) stack.push_back(w);
    }
    if (static_cast<int>(seen.size()) == size) return true;
  }
  return false;
}

std::vector<Graph> all_labeled_graphs(int d) {
  std::vector<Edge> pairs;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m & (std::uint64_t{1} << k)) edges.push_back(pairs[k]);
    out.emplace_back(d, edges);
  }
  return out;
}

std::vector<Binomial> fiber_binomials(const PointConfiguration& config, int degree) {
  const std::size_t n = config.size();
  std::map<std::vector<Coord>, std::vector<Monomial>> fibers;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      Monomial m(e);
      fibers[config.image(m)].push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  std::vector<Binomial> out;
  for (const auto& [image, ms] : fibers)
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b) out.push_back(Binomial{ms[a], ms[b]});
  return out;
}

long eulerian(int d, int k) {
  if (k < 0 || k >= std::max(d, 1)) return (d == 0 && k == 0) ? 1 : 0;
  if (d == 1) return k == 0 ? 1 : 0;
  return (k + 1) * eulerian(d - 1, k) + (d - k) * eulerian(d - 1, k - 1);
}

}  // namespace refpoly::oracle
