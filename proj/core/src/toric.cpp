#include "refpoly/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "refpoly/constructions.hpp"
#include "refpoly/decomposition.hpp"
#include "refpoly/errors.hpp"

namespace refpoly {

PointConfiguration::PointConfiguration(int rows, std::vector<std::vector<Coord>> columns)
    : rows_(rows), columns_(std::move(columns)) {
  if (rows < 0) throw DimensionError("configuration: negative row count");
  std::set<std::vector<Coord>> seen;
  for (const auto& c : columns_) {
    if (static_cast<int>(c.size()) != rows) throw DimensionError("configuration: ragged column");
    if (!seen.insert(c).second) throw PreconditionError("configuration: repeated column");
  }
}

bool PointConfiguration::is_nonnegative() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) {
    return std::all_of(c.begin(), c.end(), [](Coord x) { return x >= 0; });
  });
}

namespace {

bool is_zero(const std::vector<Coord>& c) {
  return std::all_of(c.begin(), c.end(), [](Coord x) { return x == 0; });
}

}  // namespace

bool PointConfiguration::has_zero_column() const {
  return std::any_of(columns_.begin(), columns_.end(), is_zero);
}

bool PointConfiguration::last_column_is_zero() const {
  return !columns_.empty() && is_zero(columns_.back());
}

std::vector<Coord> PointConfiguration::image(const Monomial& m) const {
  if (m.size() != columns_.size()) throw DimensionError("monomial length differs from column count");
  std::vector<Coord> out(rows_ + 1, 0);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const Coord e = m.exponents[j];
    if (e == 0) continue;
    for (int r = 0; r < rows_; ++r) out[r] = checked_add(out[r], checked_mul(e, columns_[j][r]));
    out[rows_] = checked_add(out[rows_], e);
  }
  return out;
}

PointConfiguration stable_set_configuration(const Graph& g) {
  const VRep q = stable_set_polytope(g);
  return PointConfiguration(q.ambient_dim(), q.points());
}

bool harmony(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.rows() != b.rows()) throw PreconditionError("harmony: row counts differ");
  if (!a.has_zero_column() || !b.has_zero_column())
    throw PreconditionError("harmony: both configurations need the zero column");
  if (!a.is_nonnegative() || !b.is_nonnegative()) return false;
  const std::set<std::vector<Coord>> cols_a(a.columns().begin(), a.columns().end());
  const std::set<std::vector<Coord>> cols_b(b.columns().begin(), b.columns().end());
  std::vector<Coord> plus(a.rows()), minus(a.rows());
  for (const auto& x : a.columns()) {
    for (const auto& y : b.columns()) {
      for (int k = 0; k < a.rows(); ++k) {
        const Coord c = x[k] - y[k];
        plus[k] = std::max<Coord>(c, 0);
        minus[k] = std::max<Coord>(-c, 0);
      }
      if (!cols_a.contains(plus) || !cols_b.contains(minus)) return false;
    }
  }
  return true;
}

PointConfiguration omega_matrix(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.rows() != b.rows()) throw PreconditionError("omega matrix: row counts differ");
  const int d = a.rows();
  std::vector<std::vector<Coord>> cols;
  cols.reserve(a.size() + b.size() + 1);
  for (const auto& y : b.columns()) {
    std::vector<Coord> c(d + 1);
    for (int k = 0; k < d; ++k) c[k] = -y[k];
    c[d] = -1;
    cols.push_back(std::move(c));
  }
  for (const auto& x : a.columns()) {
    std::vector<Coord> c(x);
    c.push_back(1);
    cols.push_back(std::move(c));
  }
  cols.emplace_back(d + 1, 0);
  return PointConfiguration(d + 1, std::move(cols));
}

bool is_toric_binomial(const PointConfiguration& config, const Binomial& f) {
  return f.lead != f.trail && config.image(f.lead) == config.image(f.trail);
}

namespace {

// Removes the common power of variable v from both monomials.
void divide_out(Binomial& f, std::size_t v) {
  const int k = std::min(f.lead.exponents[v], f.trail.exponents[v]);
  f.lead.exponents[v] -= k;
  f.trail.exponents[v] -= k;
}

}  // namespace

std::vector<Binomial> toric_ideal_generators(const PointConfiguration& config) {
  const std::size_t n = config.size();
  std::vector<std::vector<Coord>> rows(config.rows() + 1, std::vector<Coord>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (int r = 0; r < config.rows(); ++r) rows[r][j] = config.column(j)[r];
    rows[config.rows()][j] = 1;
  }
  const auto kernel = integer_kernel(rows, n);

  MonomialOrder order = MonomialOrder::natural(n);
  std::vector<Binomial> gens;
  for (const auto& u : kernel) {
    std::vector<int> pos(n, 0), neg(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (u[j] > 0) pos[j] = static_cast<int>(u[j]);
      if (u[j] < 0) neg[j] = static_cast<int>(-u[j]);
    }
    Binomial f;
    if (orient(Monomial(std::move(pos)), Monomial(std::move(neg)), order, f)) gens.push_back(f);
  }

  // Quadrics of the toric ideal, read off the degree-2 fibers. They do not
  // change the saturation but bring the starting ideal much closer to it.
  std::map<std::vector<Coord>, std::vector<Monomial>> fibers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Monomial m = Monomial::one(n);
      ++m.exponents[i];
      ++m.exponents[j];
      fibers[config.image(m)].push_back(std::move(m));
    }
  }
  for (const auto& [image, monomials] : fibers) {
    for (std::size_t k = 1; k < monomials.size(); ++k) {
      Binomial f;
      if (orient(monomials[0], monomials[k], order, f)) gens.push_back(std::move(f));
    }
  }

  // Lattice ideal -> toric ideal: saturate by each variable. In a graded
  // reverse-lex order with v smallest, (J : v^inf) is generated by the basis
  // elements with v divided out.
  for (std::size_t v = 0; v < n && !gens.empty(); ++v) {
    order = MonomialOrder::natural(n).with_smallest(v);
    gens = groebner_basis(gens, order);
    for (auto& f : gens) divide_out(f, v);
  }
  return gens;
}

std::vector<Binomial> toric_groebner(const PointConfiguration& config, const MonomialOrder& order) {
  if (order.variables() != config.size())
    throw DimensionError("order size differs from the column count");
  auto gens = toric_ideal_generators(config);
  for (auto& f : gens) {
    Binomial g;
    orient(f.lead, f.trail, order, g);
    f = std::move(g);
  }
  return groebner_basis(gens, order);
}

std::vector<Monomial> initial_ideal_min_gens(const std::vector<Binomial>& gb,
                                             const MonomialOrder& order) {
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& f : gb) leads.push_back(f.lead);
  std::sort(leads.begin(), leads.end(),
            [&](const Monomial& x, const Monomial& y) { return order.less(x, y); });
  return leads;
}

bool is_squarefree(const std::vector<Monomial>& monomials) {
  return std::all_of(monomials.begin(), monomials.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

namespace {

bool dominated(const std::vector<Coord>& lo, const std::vector<Coord>& hi) {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k]) return false;
  return true;
}

void check_canonical(const PointConfiguration& c, const char* name) {
  if (!c.last_column_is_zero())
    throw PreconditionError(std::string(name) + ": last column is not the zero vector");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (dominated(c.column(i), c.column(j)))
        throw PreconditionError(std::string(name) + ": column " + std::to_string(j + 1) +
                                " dominates earlier column " + std::to_string(i + 1));
}

}  // namespace

CanonicalOrders canonical_orders(const PointConfiguration& a, const PointConfiguration& b) {
  check_canonical(a, "A");
  check_canonical(b, "B");
  return CanonicalOrders{MonomialOrder::natural(a.size()), MonomialOrder::natural(b.size()),
                         MonomialOrder::natural(a.size() + b.size() + 1)};
}

std::vector<Monomial> predicted_initial_gens(const PointConfiguration& a,
                                             const PointConfiguration& b) {
  const auto orders = canonical_orders(a, b);
  const auto ma = initial_ideal_min_gens(toric_groebner(a, orders.a), orders.a);
  const auto mb = initial_ideal_min_gens(toric_groebner(b, orders.b), orders.b);
  if (!is_squarefree(ma)) throw PreconditionError("in(I_A) is not squarefree");
  if (!is_squarefree(mb)) throw PreconditionError("in(I_B) is not squarefree");

  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t vars = n + m + 1;
  auto x = [&](std::size_t i) { return m + i; };
  auto y = [&](std::size_t j) { return j; };

  std::vector<Monomial> out;
  auto pair = [&](std::size_t i, std::size_t j) {
    Monomial mono = Monomial::one(vars);
    mono.exponents[x(i)] = 1;
    mono.exponents[y(j)] = 1;
    out.push_back(std::move(mono));
  };
  pair(n - 1, m - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      bool meet = false;
      for (int k = 0; k < a.rows() && !meet; ++k) meet = a.column(i)[k] != 0 && b.column(j)[k] != 0;
      if (meet) pair(i, j);
    }
  for (const auto& g : ma) {
    Monomial mono = Monomial::one(vars);
    for (std::size_t i = 0; i < n; ++i) mono.exponents[x(i)] = g.exponents[i];
    out.push_back(std::move(mono));
  }
  for (const auto& g : mb) {
    Monomial mono = Monomial::one(vars);
    for (std::size_t j = 0; j < m; ++j) mono.exponents[y(j)] = g.exponents[j];
    out.push_back(std::move(mono));
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& p, const Monomial& q) { return orders.combined.less(p, q); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_compressed_geometric(const VRep& points) {
  const ConvexHull hull = convex_hull(points);
  for (const auto& f : hull.hrep.facets) {
    for (const auto& p : points.points()) {
      Coord s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s = checked_add(s, checked_mul(f.normal[i], p[i]));
      if (s != f.offset && s != f.offset - 1) return false;
    }
  }
  return true;
}

bool is_compressed_bruteforce(const PointConfiguration& config) {
  const std::size_t n = config.size();
  if (n > 6) throw CapacityError("all-orders compressedness check is limited to 6 columns");
  std::vector<std::size_t> ranking(n);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  const auto gens = toric_ideal_generators(config);
  do {
    const MonomialOrder order(ranking);
    std::vector<Binomial> oriented;
    for (const auto& f : gens) {
      Binomial g;
      orient(f.lead, f.trail, order, g);
      oriented.push_back(std::move(g));
    }
    const auto gb = groebner_basis(oriented, order);
    if (!is_squarefree(initial_ideal_min_gens(gb, order))) return false;
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return true;
}

bool SquarefreeTheoremReport::consistent() const {
  const bool geometry_ok = omega_reflexive.value_or(true) && omega_idp.value_or(true);
  if (hypotheses_hold && !(computed_squarefree && matches_prediction && geometry_ok)) return false;
  if (computed_squarefree && !geometry_ok) return false;
  return true;
}

SquarefreeTheoremReport verify_squarefree_theorem(const Graph& g1, const Graph& g2,
                                                  const SquarefreeOptions& options) {
  if (g1.vertex_count() != g2.vertex_count())
    throw InputError("graphs must have the same vertex count");
  const auto a = stable_set_configuration(g1);
  const auto b = stable_set_configuration(g2);
  const auto orders = canonical_orders(a, b);

  SquarefreeTheoremReport r;
  r.harmony = harmony(a, b);
  r.a_squarefree = is_squarefree(initial_ideal_min_gens(toric_groebner(a, orders.a), orders.a));
  r.b_squarefree = is_squarefree(initial_ideal_min_gens(toric_groebner(b, orders.b), orders.b));
  r.hypotheses_hold = r.harmony && r.a_squarefree && r.b_squarefree;

  const auto combined = omega_matrix(a, b);
  r.variables = combined.size();
  r.computed = initial_ideal_min_gens(toric_groebner(combined, orders.combined), orders.combined);
  r.computed_squarefree = is_squarefree(r.computed);
  if (r.hypotheses_hold) {
    r.predicted = predicted_initial_gens(a, b);
    r.matches_prediction = *r.predicted == r.computed;
  }
  if (options.check_geometry) {
    const ConvexHull hull = convex_hull(omega_of_graphs(g1, g2));
    r.omega_reflexive = is_reflexive(hull);
    r.omega_idp = has_idp(hull, options.idp_bound).holds;
  }
  return r;
}

}  // namespace refpoly
