#include <benchmark/benchmark.h>

#include "medeig/bounds.hpp"
#include "medeig/certification.hpp"
#include "medeig/generators.hpp"

using namespace medeig;

static void BM_plane_construction(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Graph g = projective_plane_incidence(q);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_plane_construction)->Arg(9)->Arg(16)->Arg(25)->Arg(32);

static void BM_check_all(benchmark::State& state) {
  const Graph g = random_bounded_degree(static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) {
    auto reports = check_all(g, 5);
    benchmark::DoNotOptimize(reports.data());
  }
}
BENCHMARK(BM_check_all)->Arg(20)->Arg(40)->Arg(60);

static void BM_certify_range(benchmark::State& state) {
  for (auto _ : state) {
    auto records = certify_range(75, 139);
    benchmark::DoNotOptimize(records.data());
  }
}
BENCHMARK(BM_certify_range);

static void BM_grid_oracle(benchmark::State& state) {
  const int resolution = static_cast<int>(state.range(0));
  const CertificationRecord r = objective_closed_form(75);
  for (auto _ : state) {
    GridOracleResult g = grid_oracle(75, r.delta, resolution);
    benchmark::DoNotOptimize(g.max_value);
  }
}
BENCHMARK(BM_grid_oracle)->Arg(50)->Arg(100)->Arg(200);

static void BM_graph6_roundtrip(benchmark::State& state) {
  const Graph g = random_bounded_degree(static_cast<int>(state.range(0)), 8, 21);
  for (auto _ : state) {
    Graph back = Graph::from_graph6(g.to_graph6());
    benchmark::DoNotOptimize(back.order());
  }
}
BENCHMARK(BM_graph6_roundtrip)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
