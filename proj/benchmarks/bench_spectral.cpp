#include <benchmark/benchmark.h>

#include "medeig/generators.hpp"
#include "medeig/spectral.hpp"

using namespace medeig;

static void BM_eigenvalues_plane(benchmark::State& state) {
  const Graph g = projective_plane_incidence(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Spectrum s = eigenvalues(g);
    benchmark::DoNotOptimize(s.values.data());
  }
  state.SetLabel("n=" + std::to_string(g.order()));
}
BENCHMARK(BM_eigenvalues_plane)->Arg(2)->Arg(3)->Arg(5)->Arg(9);

static void BM_eigenvalues_random(benchmark::State& state) {
  const Graph g = random_bounded_degree(static_cast<int>(state.range(0)), 6, 42);
  for (auto _ : state) {
    Spectrum s = eigenvalues(g);
    benchmark::DoNotOptimize(s.values.data());
  }
}
BENCHMARK(BM_eigenvalues_random)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_char_poly_exact(benchmark::State& state) {
  const Graph g = random_bounded_degree(static_cast<int>(state.range(0)), 4, 7);
  for (auto _ : state) {
    ExactCharPoly cp = char_poly_exact(g);
    benchmark::DoNotOptimize(cp.coeffs.data());
  }
}
BENCHMARK(BM_char_poly_exact)->Arg(16)->Arg(32)->Arg(64);

static void BM_integrality_witness(benchmark::State& state) {
  const Graph g = random_bounded_degree(static_cast<int>(state.range(0)), 4, 11);
  for (auto _ : state) {
    IntegralityWitness w = integrality_witness(g, 4);
    benchmark::DoNotOptimize(w.witness.get_mpz_t());
  }
}
BENCHMARK(BM_integrality_witness)->Arg(16)->Arg(32);

static void BM_eigenvalues_oracle(benchmark::State& state) {
  const Graph g = random_bounded_degree(static_cast<int>(state.range(0)), 3, 5);
  for (auto _ : state) {
    Spectrum s = eigenvalues_oracle(g);
    benchmark::DoNotOptimize(s.values.data());
  }
}
BENCHMARK(BM_eigenvalues_oracle)->Arg(8)->Arg(12)->Arg(16);
