#include "refpoly/groebner.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "refpoly/errors.hpp"

namespace refpoly {

bool orient(Monomial u, Monomial v, const MonomialOrder& order, Binomial& out) {
  const auto c = order.compare(u, v);
  if (c == 0) return false;
  if (c > 0) {
    out = Binomial{std::move(u), std::move(v)};
  } else {
    out = Binomial{std::move(v), std::move(u)};
  }
  return true;
}

namespace {

// Support bitmask of a monomial; a can divide b only if supp(a) is inside
// supp(b) and deg(a) <= deg(b). Used to skip most exponent comparisons.
constexpr std::size_t kSupportWords = 4;
using Support = std::array<std::uint64_t, kSupportWords>;

Support support_of(const Monomial& m) {
  if (m.size() > 64 * kSupportWords) throw CapacityError("Groebner engine supports at most 256 variables");
  Support s{};
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.exponents[i] > 0) s[i / 64] |= std::uint64_t{1} << (i % 64);
  return s;
}

bool support_within(const Support& inner, const Support& outer) {
  for (std::size_t w = 0; w < kSupportWords; ++w)
    if ((inner[w] & ~outer[w]) != 0) return false;
  return true;
}

// Monomial with cached support and degree.
struct Tagged {
  Monomial m;
  Support support;
  int degree;

  explicit Tagged(Monomial mono) : m(std::move(mono)), support(support_of(m)), degree(m.degree()) {}

  bool divides(const Tagged& other) const {
    return degree <= other.degree && support_within(support, other.support) && m.divides(other.m);
  }
};

// Basis with cached lead data for fast divisor search.
class Reducer {
 public:
  void add(Binomial f) {
    leads_.emplace_back(f.lead);
    elements_.push_back(std::move(f));
  }

  const Tagged& lead(std::size_t i) const { return leads_[i]; }

  const std::vector<Binomial>& elements() const { return elements_; }
  const Binomial& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }

  // Rewrites m by lead -> trail until no lead divides it. Each step
  // decreases m in the order, so this terminates.
  Monomial normal_form(Monomial m) const {
    Support s = support_of(m);
    int deg = m.degree();
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (leads_[k].degree > deg || !support_within(leads_[k].support, s)) continue;
        const Binomial& g = elements_[k];
        if (!g.lead.divides(m)) continue;
        for (std::size_t i = 0; i < m.size(); ++i) m.exponents[i] += g.trail.exponents[i] - g.lead.exponents[i];
        s = support_of(m);
        deg = m.degree();
        reduced = true;
        break;
      }
    }
    return m;
  }

 private:
  std::vector<Binomial> elements_;
  std::vector<Tagged> leads_;
};

struct Pair {
  Tagged lcm;
  std::size_t i;
  std::size_t j;
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.degree != b.lcm.degree) return a.lcm.degree < b.lcm.degree;
    const auto c = order->compare(a.lcm.m, b.lcm.m);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.exponents[k] > 0 && b.exponents[k] > 0) return false;
  return true;
}

std::vector<Binomial> interreduce(std::vector<Binomial> g, const MonomialOrder& order) {
  std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) {
    return order.less(a.lead, b.lead);
  });
  Reducer minimal;
  for (auto& b : g) {
    bool redundant = false;
    for (const auto& m : minimal.elements())
      if (m.lead.divides(b.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.add(std::move(b));
  }
  std::vector<Binomial> out;
  out.reserve(minimal.size());
  for (const auto& b : minimal.elements()) out.push_back(Binomial{b.lead, minimal.normal_form(b.trail)});
  return out;
}

}  // namespace

Monomial normal_form(Monomial m, const std::vector<Binomial>& basis, const MonomialOrder& order) {
  (void)order;  // each step strictly decreases m in the order the basis was built for
  Reducer r;
  for (const auto& g : basis) r.add(g);
  return r.normal_form(std::move(m));
}

bool reduces_to_zero(const Monomial& u, const Monomial& v, const std::vector<Binomial>& basis,
                     const MonomialOrder& order) {
  return normal_form(u, basis, order) == normal_form(v, basis, order);
}

std::vector<Binomial> groebner_basis(const std::vector<Binomial>& generators,
                                     const MonomialOrder& order) {
  Reducer basis;
  std::vector<bool> active;  // lead not divisible by a later lead
  std::set<Pair, PairLess> pairs(PairLess{&order});

  // Gebauer-Moeller update for a new element h at index `hi`.
  auto insert = [&](Binomial h) {
    const std::size_t hi = basis.size();
    const Tagged lh(h.lead);
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) candidates.push_back(Pair{Tagged(lcm(basis[g].lead, lh.m)), g, hi});

    // Chain criterion among the new pairs: drop (g, h) if another new pair
    // has an lcm properly dividing it, or an equal lcm appears earlier.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool drop = false;
      for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
        if (a == b) continue;
        const Pair& q = candidates[b];
        if (!q.lcm.divides(p.lcm)) continue;
        if (q.lcm.degree != p.lcm.degree || b < a) drop = true;
      }
      if (!drop) kept.push_back(p);
    }
    // Old pairs whose lcm is a multiple of lead(h) with both new lcms
    // differing become redundant.
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (lh.divides(it->lcm) && lcm(basis[it->i].lead, lh.m) != it->lcm.m &&
          lcm(basis[it->j].lead, lh.m) != it->lcm.m) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : kept)
      if (!coprime(basis[p.i].lead, lh.m)) pairs.insert(std::move(p));
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(basis.lead(g))) active[g] = false;
    basis.add(std::move(h));
    active.push_back(true);
  };

  std::vector<Binomial> sorted = generators;
  std::sort(sorted.begin(), sorted.end(), [&](const Binomial& a, const Binomial& b) {
    return order.less(a.lead, b.lead);
  });
  for (const auto& f : sorted) {
    Binomial h;
    if (orient(basis.normal_form(f.lead), basis.normal_form(f.trail), order, h)) insert(std::move(h));
  }

  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Binomial& f = basis[p.i];
    const Binomial& g = basis[p.j];
    Monomial u = basis.normal_form((p.lcm.m / f.lead) * f.trail);
    Monomial v = basis.normal_form((p.lcm.m / g.lead) * g.trail);
    Binomial h;
    if (orient(std::move(u), std::move(v), order, h)) insert(std::move(h));
  }

  std::vector<Binomial> live;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (active[i]) live.push_back(basis[i]);
  return interreduce(std::move(live), order);
}

bool satisfies_buchberger_criterion(const std::vector<Binomial>& basis, const MonomialOrder& order) {
  (void)order;
  Reducer r;
  for (const auto& g : basis) r.add(g);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Monomial m = lcm(basis[i].lead, basis[j].lead);
      const Monomial u = (m / basis[i].lead) * basis[i].trail;
      const Monomial v = (m / basis[j].lead) * basis[j].trail;
      if (r.normal_form(u) != r.normal_form(v)) return false;
    }
  }
  return true;
}

bool is_reduced(const std::vector<Binomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (order.compare(basis[i].lead, basis[i].trail) <= 0) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (basis[j].lead.divides(basis[i].lead) || basis[j].lead.divides(basis[i].trail)) return false;
    }
    if (basis[i].lead.divides(basis[i].trail)) return false;
  }
  return true;
}

}  // namespace refpoly
