// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "refpoly/constructions.hpp"
#include "refpoly/decomposition.hpp"
#include "refpoly/ehrhart.hpp"
#include "refpoly/errors.hpp"
#include "refpoly/groebner.hpp"
#include "refpoly/toric.hpp"
#include "refpoly_cli/sweep.hpp"

namespace {

using namespace refpoly;

// Collects the failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool passed() const { return failures_.empty(); }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string str(const DeltaPolynomial& p) { return p.to_string(); }

DeltaPolynomial poly(std::initializer_list<long> c, int dim) { return DeltaPolynomial::from(c, dim); }

void expect_delta(Check& c, const std::string& name, const DeltaPolynomial& got, const DeltaPolynomial& want) {
  c.expect(got == want, name + " = " + str(got) + ", expected " + str(want));
}

void ac1(Check& c) {
  const Graph c5 = cycle(5);
  const ConvexHull gamma = convex_hull(gamma_of_graphs(c5, c5));
  const ConvexHull omega = convex_hull(hansen(c5));
  expect_delta(c, "delta(Gamma)", delta_polynomial(gamma), poly({1, 15, 60, 62, 15, 1}, 5));
  expect_delta(c, "delta(Omega)", delta_polynomial(omega), poly({1, 16, 75, 124, 75, 16, 1}, 6));
  c.expect(!is_reflexive(gamma), "Gamma reflexive");
  c.expect(is_reflexive(omega), "Omega not reflexive");
  const IdpReport g = has_idp(gamma);
  c.expect(g.holds, "Gamma fails IDP");
  const IdpReport o = has_idp(omega);
  c.expect(!o.holds && o.witness && o.witness->n == 3, "Omega IDP witness not at dilation 3");
  if (o.witness) c.expect(verify_witness(omega, o.witness->n, o.witness->point), "Omega witness decomposes");
  const DilatedPoint hole = odd_hole_witness(c5, *find_odd_hole(c5), 5);
  c.expect(hole.n == 3 && verify_witness(omega, hole.n, hole.point), "odd-hole witness decomposes");
}

void ac2(Check& c) {
  const Graph c7 = cycle(7);
  const ConvexHull omega = convex_hull(hansen(c7));
  expect_delta(c, "delta(Gamma)", delta_polynomial(gamma_of_graphs(c7, c7)),
               poly({1, 49, 567, 1801, 1799, 569, 49, 1}, 7));
  expect_delta(c, "delta(Omega)", delta_polynomial(omega), poly({1, 50, 616, 2370, 3598, 2368, 618, 50, 1}, 8));
  c.expect(!is_reflexive(omega), "Omega reflexive");
  c.note("L(8) for Omega = " + std::to_string(count_dilate(omega, 8)));
}

void ac3(Check& c) {
  const Graph g = complete_multipartite({2, 2, 2});
  const Graph s = suspension(g);
  const ConvexHull omega = convex_hull(hansen(g));
  const ConvexHull suspended = convex_hull(gamma_of_graphs(s, s));
  c.expect(omega.hrep.facets.size() == 54, "Omega facets " + std::to_string(omega.hrep.facets.size()));
  c.expect(suspended.hrep.facets.size() == 432, "Gamma(suspension) facets " + std::to_string(suspended.hrep.facets.size()));
  const DeltaPolynomial a = delta_polynomial(omega);
  const DeltaPolynomial b = delta_polynomial(suspended);
  expect_delta(c, "delta(Gamma(suspension))", b, a);
  c.expect(normalized_volume(a) == normalized_volume(b), "volumes differ");
  c.note("delta = " + str(a) + ", volume " + normalized_volume(a).get_str());
}

Graph example_4_2() {
  // Complement of two 5-cycles 1..5 and 6..10 joined by the edge {3,6}.
  return complement(Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {3, 6},
                               {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10}}));
}

void ac4(Check& c) {
  const Graph g = example_4_2();
  c.expect(!is_perfect_spgt(g), "graph is perfect");
  const ConvexHull gamma = convex_hull(gamma_of_graphs(g, g));
  const ConvexHull omega = convex_hull(hansen(g));
  c.expect(!is_reflexive(gamma), "Gamma reflexive");
  c.expect(is_reflexive(omega), "Omega not reflexive");
  const IdpReport gi = has_idp(gamma);
  const IdpReport oi = has_idp(omega);
  c.expect(!gi.holds, "Gamma has IDP up to n=" + std::to_string(gi.checked_bound));
  c.expect(!oi.holds, "Omega has IDP up to n=" + std::to_string(oi.checked_bound));
  if (gi.witness) {
    c.expect(verify_witness(gamma, gi.witness->n, gi.witness->point), "Gamma witness decomposes");
    c.note("Gamma witness at n=" + std::to_string(gi.witness->n));
  }
  if (oi.witness) {
    c.expect(verify_witness(omega, oi.witness->n, oi.witness->point), "Omega witness decomposes");
    c.note("Omega witness at n=" + std::to_string(oi.witness->n));
  }
}

// Pair of labeled graphs up to simultaneous relabeling, which leaves all
// three polytopes unchanged up to a coordinate permutation.
std::pair<std::uint64_t, std::uint64_t> pair_key(const Graph& a, const Graph& b) {
  const int d = a.vertex_count();
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::pair<std::uint64_t, std::uint64_t> best{~0ULL, ~0ULL};
  do {
    auto code = [&](const Graph& g) {
      std::uint64_t m = 0;
      int bit = 0;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++bit)
          if (g.adjacent(perm[i] + 1, perm[j] + 1)) m |= 1ULL << bit;
      return m;
    };
    best = std::min(best, std::pair(code(a), code(b)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void expect_delta_identity(Check& c, const Graph& g1, const Graph& g2, const std::string& label) {
  const DeltaTheoremReport r = verify_delta_theorem(g1, g2);
  c.expect(r.hypothesis_holds, label + ": pair not perfect");
  c.expect(r.omega_matches_suspended, label + ": delta(Omega) != delta(Gamma(suspensions))");
  c.expect(r.omega_matches_lifted, label + ": delta(Omega) != (1+t) delta(Gamma)");
  c.expect(r.volume_ratio_two, label + ": volume ratio not 2");
}

void ac5(Check& c) {
  int labeled = 0, classes = 0;
  for (int d = 1; d <= 4; ++d) {
    std::vector<Graph> perfect;
    for (const Graph& g : oracle::all_labeled_graphs(d))
      if (is_perfect_spgt(g)) perfect.push_back(g);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const Graph& g1 : perfect)
      for (const Graph& g2 : perfect) {
        ++labeled;
        if (!seen.insert(pair_key(g1, g2)).second) continue;
        ++classes;
        expect_delta_identity(c, g1, g2, format_graph6(g1) + "/" + format_graph6(g2));
      }
  }
  c.note(std::to_string(labeled) + " labeled pairs with d <= 4, " + std::to_string(classes) +
         " up to simultaneous relabeling");
  const std::vector<std::pair<Graph, Graph>> fixed{
      {path(5), path(5)},
      {path(5), complete(5)},
      {complete_multipartite({2, 3}), empty_graph(5)},
      {complete_multipartite({1, 2, 2}), path(5)},
      {Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}}), complete_multipartite({2, 3})},
      {path(6), path(6)},
      {complete_multipartite({2, 2, 2}), complete_multipartite({2, 2, 2})},
      {path(6), complete_multipartite({3, 3})},
      {Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}), complete(6)},
      {complete_multipartite({1, 2, 3}), empty_graph(6)}};
  for (std::size_t i = 0; i < fixed.size(); ++i)
    expect_delta_identity(c, fixed[i].first, fixed[i].second, "fixed pair " + std::to_string(i + 1));
}

struct Verdicts {
  bool reflexive = false;
  bool idp = false;
  bool palindromic = false;
};

Verdicts verdicts(const VRep& p) {
  const ConvexHull h = convex_hull(p);
  return {is_reflexive(h), has_idp(h).holds, is_palindromic(delta_polynomial(h))};
}

void ac6(Check& c) {
  std::vector<std::pair<Graph, Graph>> pairs;
  for (int d = 1; d <= 5; ++d)
    for (const Graph& g : nonisomorphic_graphs(d)) pairs.emplace_back(g, g);
  const std::vector<std::pair<Graph, Graph>> selected{
      {cycle(5), complete(5)}, {complete(5), cycle(5)}, {cycle(5), path(5)},
      {path(5), empty_graph(5)}, {path(4), cycle(4)}, {complete_multipartite({2, 3}), path(5)},
      {complement(path(5)), cycle(5)}, {path(3), complete(3)}};
  pairs.insert(pairs.end(), selected.begin(), selected.end());
  int gamma_idp_without_perfect = 0;
  for (const auto& [g1, g2] : pairs) {
    const std::string label = format_graph6(g1) + "/" + format_graph6(g2);
    const bool perfect = is_perfect_spgt(g1) && is_perfect_spgt(g2);
    const Verdicts gamma = verdicts(gamma_of_graphs(g1, g2));
    const Verdicts omega = verdicts(omega_of_graphs(g1, g2));
    c.expect(gamma.reflexive == perfect, label + ": Gamma reflexive != perfect");
    c.expect((gamma.reflexive && gamma.idp) == perfect, label + ": Gamma reflexive with IDP != perfect");
    c.expect(omega.idp == perfect, label + ": Omega IDP != perfect");
    c.expect(gamma.palindromic == gamma.reflexive, label + ": Gamma palindromic != reflexive");
    c.expect(omega.palindromic == omega.reflexive, label + ": Omega palindromic != reflexive");
    if (gamma.idp && !perfect) ++gamma_idp_without_perfect;
  }
  c.note(std::to_string(pairs.size()) + " pairs; Gamma has IDP without both graphs perfect in " +
         std::to_string(gamma_idp_without_perfect) + " (e.g. C5), so IDP alone does not characterize");
}

void ac7(Check& c) {
  const std::vector<std::pair<std::string, Graph>> graphs{
      {"K2", complete(2)}, {"P3", path(3)}, {"K3", complete(3)}, {"P4", path(4)}, {"C4", cycle(4)}};
  for (const auto& [n1, g1] : graphs)
    for (const auto& [n2, g2] : graphs) {
      if (g1.vertex_count() != g2.vertex_count()) continue;
      const std::string label = n1 + "/" + n2;
      const SquarefreeTheoremReport r = verify_squarefree_theorem(g1, g2, {.check_geometry = false, .idp_bound = {}});
      c.expect(r.harmony, label + ": not in harmony");
      c.expect(r.a_squarefree && r.b_squarefree, label + ": in(I_A) or in(I_B) not squarefree");
      c.expect(r.computed_squarefree, label + ": combined initial ideal not squarefree");
      c.expect(r.predicted && r.matches_prediction, label + ": generators differ from prediction");
      // Independent re-check of the basis itself.
      const PointConfiguration m =
          omega_matrix(stable_set_configuration(g1), stable_set_configuration(g2));
      const MonomialOrder order = canonical_orders(stable_set_configuration(g1), stable_set_configuration(g2)).combined;
      const auto gb = toric_groebner(m, order);
      c.expect(satisfies_buchberger_criterion(gb, order) && is_reduced(gb, order), label + ": basis check failed");
      c.expect(initial_ideal_min_gens(gb, order) == r.computed, label + ": initial ideal not reproducible");
    }
}

std::vector<VRep> enumeration_polytopes() {
  std::vector<VRep> out;
  for (int d = 1; d <= 3; ++d)
    for (const Graph& g1 : nonisomorphic_graphs(d))
      for (const Graph& g2 : nonisomorphic_graphs(d)) {
        out.push_back(gamma_of_graphs(g1, g2));
        out.push_back(omega_of_graphs(g1, g2));
      }
  for (const Graph& g : nonisomorphic_graphs(4)) {
    out.push_back(stable_set_polytope(g));
    out.push_back(gamma_of_graphs(g, g));
    out.push_back(gamma_of_graphs(g, complement(g)));
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int d = 2; d <= 4; ++d)
    for (int t = 0; t < 10; ++t) {
      std::set<LatticePoint> pts;
      while (pts.size() < static_cast<std::size_t>(d + 3)) {
        LatticePoint p(d);
        for (auto& x : p) x = coord(rng);
        pts.insert(p);
      }
      VRep v(d, {pts.begin(), pts.end()});
      if (affine_dimension(v) == d) out.push_back(v);
    }
  return out;
}

void ac8(Check& c) {
  const auto polytopes = enumeration_polytopes();
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    const ConvexHull h = convex_hull(polytopes[i]);
    for (Coord n = 1; n <= 3; ++n)
      c.expect(lattice_points(h, n) == oracle::box_points(polytopes[i], n),
               "enumeration differs on polytope " + std::to_string(i) + " at n=" + std::to_string(n));
  }
  int graphs = 0;
  auto perfect_check = [&](const Graph& g) {
    ++graphs;
    c.expect(is_perfect_spgt(g) == is_perfect_definition(g), "perfectness differs on " + format_graph6(g));
  };
  for (int d = 1; d <= 6; ++d)
    for (const Graph& g : oracle::all_labeled_graphs(d)) perfect_check(g);
  for (const Graph& g : nonisomorphic_graphs(7)) perfect_check(g);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::vector<Edge> edges;
    const double density = 0.2 + 0.6 * (t % 7) / 6.0;
    std::bernoulli_distribution coin(density);
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    perfect_check(Graph(8, edges));
  }
  const std::vector<PointConfiguration> configs{
      PointConfiguration(1, {{0}, {1}, {2}}), PointConfiguration(1, {{0}, {1}, {2}, {3}}),
      PointConfiguration(1, {{0}, {2}, {3}, {5}}), PointConfiguration(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
      PointConfiguration(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}}),
      stable_set_configuration(path(3)), stable_set_configuration(complete(3)), stable_set_configuration(cycle(4))};
  int fibers = 0;
  for (const auto& config : configs) {
    const MonomialOrder order = MonomialOrder::natural(config.size());
    const auto gb = toric_groebner(config, order);
    for (int degree = 1; degree <= 5; ++degree)
      for (const Binomial& f : oracle::fiber_binomials(config, degree)) {
        ++fibers;
        c.expect(reduces_to_zero(f.lead, f.trail, gb, order),
                 "fiber binomial " + to_string(f, default_names(config.size())) + " does not reduce");
      }
  }
  c.note(std::to_string(polytopes.size()) + " polytopes, " + std::to_string(graphs) + " graphs, " +
         std::to_string(fibers) + " fiber binomials");
}

void ac9(Check& c) {
  std::ostringstream sink;
  cli::SweepOptions small;
  small.max_vertices = 5;
  const cli::SweepSummary a = cli::sweep_all(small, sink);
  cli::SweepOptions six;
  six.min_vertices = six.max_vertices = 6;
  six.skip_idp = six.skip_groebner = true;
  const cli::SweepSummary b = cli::sweep_all(six, sink);
  const int graphs = a.graphs + b.graphs;
  const int reflexive = a.omega_reflexive + b.omega_reflexive;
  c.expect(graphs == 1 + 2 + 4 + 11 + 34 + 156, "swept " + std::to_string(graphs) + " graphs");
  c.expect(reflexive == graphs, std::to_string(graphs - reflexive) + " non-reflexive Hansen polytopes");
  c.expect(a.inconsistent + b.inconsistent == 0, "inconsistent theorem checks in sweep");
  c.note(std::to_string(reflexive) + "/" + std::to_string(graphs) + " reflexive");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1 C5 delta, reflexivity and IDP", ac1},
      {"AC2 C7 delta and non-reflexive Omega", ac2},
      {"AC3 K222 facet counts and equal delta", ac3},
      {"AC4 complement graph verdicts", ac4},
      {"AC5 delta identity for perfect pairs", ac5},
      {"AC6 reflexive, IDP and palindromic verdicts", ac6},
      {"AC7 squarefree initial ideals", ac7},
      {"AC8 oracle equivalences", ac8},
      {"AC9 reflexive Hansen polytopes up to 6 vertices", ac9}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.passed() ? "PASS " : "FAIL ") << name << " (" << c.count() << " checks, " << std::fixed
              << std::setprecision(1) << seconds << " s)\n";
    for (const auto& n : c.notes()) std::cout << "     " << n << "\n";
    const std::size_t shown = std::min<std::size_t>(c.failures().size(), 10);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "     mismatch: " << c.failures()[i] << "\n";
    std::cout.flush();
    if (!c.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
