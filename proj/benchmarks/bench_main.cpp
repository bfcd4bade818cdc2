#include <benchmark/benchmark.h>

#include "refpoly/constructions.hpp"
#include "refpoly/decomposition.hpp"
#include "refpoly/ehrhart.hpp"
#include "refpoly/toric.hpp"

namespace {

using namespace refpoly;

void BM_HullHansenCycle(benchmark::State& state) {
  const VRep p = hansen(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(p));
}
BENCHMARK(BM_HullHansenCycle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_HullSuspendedK222(benchmark::State& state) {
  const Graph s = suspension(complete_multipartite({2, 2, 2}));
  const VRep p = gamma_of_graphs(s, s);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(p));
}
BENCHMARK(BM_HullSuspendedK222)->Unit(benchmark::kMillisecond);

void BM_CountDilateHansenC5(benchmark::State& state) {
  const ConvexHull h = convex_hull(hansen(cycle(5)));
  for (auto _ : state) benchmark::DoNotOptimize(count_dilate(h, state.range(0)));
}
BENCHMARK(BM_CountDilateHansenC5)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

void BM_DeltaGammaC5(benchmark::State& state) {
  const ConvexHull h = convex_hull(gamma_of_graphs(cycle(5), cycle(5)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_polynomial(h));
}
BENCHMARK(BM_DeltaGammaC5)->Unit(benchmark::kMillisecond);

void BM_IdpHansenC5(benchmark::State& state) {
  const ConvexHull h = convex_hull(hansen(cycle(5)));
  for (auto _ : state) benchmark::DoNotOptimize(has_idp(h));
}
BENCHMARK(BM_IdpHansenC5)->Unit(benchmark::kMillisecond);

void BM_ToricGroebnerPath(benchmark::State& state) {
  const Graph g = path(static_cast<int>(state.range(0)));
  const PointConfiguration a = stable_set_configuration(g);
  const PointConfiguration m = omega_matrix(a, a);
  const MonomialOrder order = canonical_orders(a, a).combined;
  for (auto _ : state) benchmark::DoNotOptimize(toric_groebner(m, order));
}
BENCHMARK(BM_ToricGroebnerPath)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
