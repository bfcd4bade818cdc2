#include <gtest/gtest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "refpoly/constructions.hpp"
#include "refpoly/errors.hpp"
#include "refpoly/groebner.hpp"
#include "refpoly/toric.hpp"

namespace refpoly {
namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

PointConfiguration lattice_point_configuration(const VRep& v) {
  const auto pts = lattice_points(convex_hull(v), 1);
  return PointConfiguration(v.ambient_dim(), pts);
}

TEST(Monomials, Arithmetic) {
  const Monomial a = mono({2, 0, 1}), b = mono({1, 1, 0});
  EXPECT_EQ(a * b, mono({3, 1, 1}));
  EXPECT_EQ(lcm(a, b), mono({2, 1, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 0, 0}));
  EXPECT_TRUE(mono({1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a / mono({1, 0, 0}), mono({1, 0, 1}));
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_TRUE(b.is_squarefree());
  EXPECT_EQ(to_string(a, default_names(3)), "x1^2*x3");
}

TEST(Monomials, GradedReverseLex) {
  const MonomialOrder o = MonomialOrder::natural(3);
  // Higher degree first.
  EXPECT_TRUE(o.less(mono({1, 0, 0}), mono({0, 0, 2})));
  // More of the smallest variable is smaller.
  EXPECT_TRUE(o.less(mono({1, 0, 1}), mono({0, 2, 0})));
  EXPECT_TRUE(o.less(mono({0, 1, 1}), mono({2, 0, 0})));
  EXPECT_TRUE(o.less(mono({0, 2, 0}), mono({1, 1, 0})));
  EXPECT_EQ(o.compare(mono({1, 1, 0}), mono({1, 1, 0})), std::strong_ordering::equal);
  const MonomialOrder r = o.with_smallest(1);
  EXPECT_EQ(r.ranking(), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_TRUE(r.less(mono({0, 2, 0}), mono({1, 0, 1})));
  EXPECT_THROW(MonomialOrder({0, 0, 1}), PreconditionError);
}

TEST(Groebner, Orient) {
  Binomial b;
  const MonomialOrder o = MonomialOrder::natural(3);
  ASSERT_TRUE(orient(mono({1, 0, 1}), mono({0, 2, 0}), o, b));
  EXPECT_EQ(b.lead, mono({0, 2, 0}));
  EXPECT_FALSE(orient(mono({1, 0, 0}), mono({1, 0, 0}), o, b));
}

TEST(Groebner, TwistedCubic) {
  // Two of the three quadrics of the twisted cubic; their ideal misses the third.
  const MonomialOrder o = MonomialOrder::natural(4);
  std::vector<Binomial> gens;
  Binomial b;
  orient(mono({1, 0, 1, 0}), mono({0, 2, 0, 0}), o, b);
  gens.push_back(b);
  orient(mono({0, 1, 0, 1}), mono({0, 0, 2, 0}), o, b);
  gens.push_back(b);
  const auto gb = groebner_basis(gens, o);
  EXPECT_TRUE(satisfies_buchberger_criterion(gb, o));
  EXPECT_TRUE(is_reduced(gb, o));
  EXPECT_FALSE(reduces_to_zero(mono({1, 0, 0, 1}), mono({0, 1, 1, 0}), gb, o));
  EXPECT_TRUE(reduces_to_zero(mono({1, 1, 0, 1}), mono({0, 2, 1, 0}), gb, o));
  for (std::size_t i = 1; i < gb.size(); ++i) EXPECT_TRUE(o.less(gb[i - 1].lead, gb[i].lead));
}

TEST(Groebner, NormalFormIsIrreducible) {
  const MonomialOrder o = MonomialOrder::natural(2);
  Binomial b;
  orient(mono({2, 0}), mono({0, 2}), o, b);
  EXPECT_EQ(normal_form(mono({5, 0}), {b}, o), mono({1, 4}));
}

TEST(Toric, ConfigurationValidation) {
  EXPECT_THROW(PointConfiguration(1, {{0}, {0}}), PreconditionError);
  EXPECT_THROW(PointConfiguration(2, {{0}}), DimensionError);
  const PointConfiguration c(1, {{2}, {1}, {0}});
  EXPECT_TRUE(c.is_nonnegative());
  EXPECT_TRUE(c.last_column_is_zero());
  EXPECT_EQ(c.image(mono({1, 2, 0})), (std::vector<Coord>{4, 3}));
}

TEST(Toric, MonomialCurve) {
  const PointConfiguration c(1, {{0}, {1}, {2}});
  const MonomialOrder o = MonomialOrder::natural(3);
  const auto gb = toric_groebner(c, o);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0].lead, mono({0, 2, 0}));
  EXPECT_EQ(gb[0].trail, mono({1, 0, 1}));
  EXPECT_FALSE(is_squarefree(initial_ideal_min_gens(gb, o)));
  const MonomialOrder m({0, 2, 1});
  EXPECT_TRUE(is_squarefree(initial_ideal_min_gens(toric_groebner(c, m), m)));
  EXPECT_THROW(toric_groebner(c, MonomialOrder::natural(4)), DimensionError);
}

TEST(Toric, AffinelyIndependentColumnsGiveZeroIdeal) {
  const PointConfiguration k2 = stable_set_configuration(complete(2));
  EXPECT_EQ(k2.columns(), (std::vector<std::vector<Coord>>{{1, 0}, {0, 1}, {0, 0}}));
  EXPECT_TRUE(toric_groebner(k2, MonomialOrder::natural(3)).empty());
}

TEST(Toric, GeneratorsAreToric) {
  for (const Graph& g : nonisomorphic_graphs(4)) {
    const PointConfiguration c = stable_set_configuration(g);
    for (const Binomial& f : toric_ideal_generators(c)) EXPECT_TRUE(is_toric_binomial(c, f));
  }
}

TEST(Toric, GroebnerBasisAgainstFiberOracle) {
  std::vector<PointConfiguration> configs{
      PointConfiguration(1, {{0}, {1}, {2}, {3}}), PointConfiguration(1, {{0}, {1}, {3}, {4}}),
      PointConfiguration(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), PointConfiguration(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}}),
      stable_set_configuration(path(3)), stable_set_configuration(complete(3))};
  for (const auto& c : configs) {
    const MonomialOrder o = MonomialOrder::natural(c.size());
    const auto gb = toric_groebner(c, o);
    EXPECT_TRUE(satisfies_buchberger_criterion(gb, o));
    EXPECT_TRUE(is_reduced(gb, o));
    for (const Binomial& f : gb) EXPECT_TRUE(is_toric_binomial(c, f));
    for (int degree = 1; degree <= 6; ++degree)
      for (const Binomial& f : oracle::fiber_binomials(c, degree))
        EXPECT_TRUE(reduces_to_zero(f.lead, f.trail, gb, o)) << to_string(f, default_names(c.size()));
  }
}

TEST(Toric, Harmony) {
  const PointConfiguration a = stable_set_configuration(cycle(5));
  const PointConfiguration b = stable_set_configuration(path(5));
  EXPECT_TRUE(harmony(a, b));
  EXPECT_FALSE(harmony(PointConfiguration(1, {{2}, {0}}), PointConfiguration(1, {{1}, {0}})));
  EXPECT_FALSE(harmony(PointConfiguration(1, {{-1}, {0}}), PointConfiguration(1, {{1}, {0}})));
  EXPECT_THROW(harmony(PointConfiguration(1, {{1}}), PointConfiguration(1, {{1}, {0}})), PreconditionError);
  EXPECT_THROW(harmony(PointConfiguration(1, {{0}}), PointConfiguration(2, {{0, 0}})), PreconditionError);
}

TEST(Toric, OmegaMatrixLayout) {
  const PointConfiguration a(1, {{1}, {0}});
  const PointConfiguration b(1, {{2}, {0}});
  const PointConfiguration o = omega_matrix(a, b);
  EXPECT_EQ(o.rows(), 2);
  EXPECT_EQ(o.columns(), (std::vector<std::vector<Coord>>{{-2, -1}, {0, -1}, {1, 1}, {0, 1}, {0, 0}}));
}

TEST(Toric, CanonicalOrders) {
  const PointConfiguration a = stable_set_configuration(path(3));
  const PointConfiguration b = stable_set_configuration(complete(3));
  const CanonicalOrders orders = canonical_orders(a, b);
  EXPECT_EQ(orders.a.ranking(), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(orders.b.ranking(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(orders.combined.variables(), 10u);
  EXPECT_THROW(canonical_orders(PointConfiguration(1, {{0}, {1}}), b), PreconditionError);
}

TEST(Toric, PredictedMatchesComputedForPerfectPairs) {
  const std::vector<std::pair<Graph, Graph>> pairs{
      {path(3), path(3)}, {path(3), complete(3)}, {cycle(4), path(4)}, {complete(2), empty_graph(2)}};
  for (const auto& [g1, g2] : pairs) {
    const auto r = verify_squarefree_theorem(g1, g2);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_TRUE(r.computed_squarefree);
    ASSERT_TRUE(r.predicted.has_value());
    EXPECT_EQ(r.computed, *r.predicted);
    EXPECT_TRUE(r.matches_prediction);
    EXPECT_EQ(r.omega_reflexive, std::optional<bool>(true));
    EXPECT_EQ(r.omega_idp, std::optional<bool>(true));
    EXPECT_TRUE(r.consistent());
  }
}

TEST(Toric, PredictionRequiresSquarefreeFactors) {
  const PointConfiguration curve(1, {{2}, {1}, {0}});
  EXPECT_THROW(predicted_initial_gens(curve, curve), PreconditionError);
}

TEST(Toric, FiveCycleIsNotSquarefree) {
  const auto r = verify_squarefree_theorem(cycle(5), cycle(5), {.check_geometry = true, .idp_bound = 3});
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_FALSE(r.computed_squarefree);
  EXPECT_FALSE(r.predicted.has_value());
  EXPECT_TRUE(r.consistent());
}

TEST(Toric, CompressedCriteriaAgree) {
  const std::vector<VRep> polytopes{
      VRep(1, {{0}, {2}}), VRep(1, {{0}, {1}}), VRep(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
      VRep(2, {{0, 0}, {2, 0}, {0, 1}}), VRep(2, {{0, 0}, {1, 0}, {0, 1}}),
      VRep(2, {{-1, 0}, {1, 0}, {0, 1}, {0, -1}}), VRep(2, {{0, 0}, {2, 0}, {0, 2}}),
      VRep(2, {{0, 0}, {1, 0}, {1, 2}}), VRep(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})};
  for (const VRep& v : polytopes) {
    const auto c = lattice_point_configuration(v);
    ASSERT_LE(c.size(), 6u);
    EXPECT_EQ(is_compressed_bruteforce(c), is_compressed_geometric(VRep(v.ambient_dim(), c.columns())))
        << v.points().size();
  }
  for (int d = 1; d <= 2; ++d)
    for (const Graph& g : nonisomorphic_graphs(d)) {
      const auto c = stable_set_configuration(g);
      EXPECT_TRUE(is_compressed_bruteforce(c));
      EXPECT_TRUE(is_compressed_geometric(stable_set_polytope(g)));
    }
  EXPECT_FALSE(is_compressed_geometric(VRep(1, {{0}, {1}, {2}})));
  EXPECT_THROW(is_compressed_bruteforce(stable_set_configuration(empty_graph(3))), CapacityError);
}

}  // namespace
}  // namespace refpoly
