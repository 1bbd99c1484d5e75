#include <benchmark/benchmark.h>

#include "shadowcover/shadow.hpp"

using namespace shadowcover;

namespace {

std::vector<Vec> cloud(int n, int m, std::uint64_t seed) {
  GaussianSource src(seed);
  std::vector<Vec> pts;
  for (int i = 0; i < m; ++i) pts.push_back(gaussian_vec(src, n));
  return pts;
}

void BM_Hull3(benchmark::State& state) {
  auto pts = cloud(3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    Body b = Body::from_points(pts, 3);
    benchmark::DoNotOptimize(b.vertices().size());
  }
}
BENCHMARK(BM_Hull3)->Arg(50)->Arg(200);

void BM_Hull4(benchmark::State& state) {
  auto pts = cloud(4, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    Body b = Body::from_points(pts, 4);
    benchmark::DoNotOptimize(b.vertices().size());
  }
}
BENCHMARK(BM_Hull4)->Arg(40)->Arg(100);

void BM_VolumeAndFacets(benchmark::State& state) {
  auto pts = cloud(3, 100, 3);
  for (auto _ : state) {
    Body b = Body::from_points(pts, 3);
    benchmark::DoNotOptimize(b.volume());
    benchmark::DoNotOptimize(b.facets().facets.size());
  }
}
BENCHMARK(BM_VolumeAndFacets);

void BM_MinkowskiSum(benchmark::State& state) {
  Body a = make_random_polytope(3, 10, 4);
  Body b = make_random_polytope(3, 10, 5);
  for (auto _ : state) {
    Body s = minkowski_sum(a, b);
    benchmark::DoNotOptimize(s.volume());
  }
}
BENCHMARK(BM_MinkowskiSum);

void BM_TranslateInto(benchmark::State& state) {
  Body k = make_random_polytope(3, 12, 6);
  Body l = reflect_scale(k, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(translate_into(k, l).feasible);
}
BENCHMARK(BM_TranslateInto);

void BM_SteinerFit(benchmark::State& state) {
  Body k = make_random_polytope(3, 8, 7);
  Body l = make_random_polytope(3, 8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(steiner_fit(k, l).values[1]);
}
BENCHMARK(BM_SteinerFit);

void BM_CoveringSweep(benchmark::State& state) {
  Body delta = make_regular_simplex(3);
  Body target = reflect_scale(delta, 2.0);
  for (auto _ : state) {
    CoveringReport r =
        covering_sweep(delta, target, 1, static_cast<int>(state.range(0)), 9, false);
    benchmark::DoNotOptimize(r.all_covered);
  }
}
BENCHMARK(BM_CoveringSweep)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
