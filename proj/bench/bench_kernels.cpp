// Serial reference vs OpenMP kernels on fixed inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "wsat/constructions.hpp"
#include "wsat/expander.hpp"
#include "wsat/extremal.hpp"

using namespace wsat;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) es.push_back({a, b});
  return Graph(n, es);
}

const Graph& gamma_input() {
  static const Graph g = random_graph(20, 0.3, 1);
  return g;
}

const Graph& iso_input() {
  static const Graph g = [] {
    std::mt19937_64 rng(4);
    return sample_regular_graph(6, 24, rng);
  }();
  return g;
}

const Graph& deficit_input() {
  static const Graph g = build_delta3(solve_params(3, make_rational(8, 5), 8)).graph;
  return g;
}

void BM_GammaBruteSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::gamma_min_brute(gamma_input()));
}
void BM_GammaBruteParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(gamma_min_brute(gamma_input()));
}

void BM_DeficitSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::gamma_deficit(deficit_input(), make_rational(3, 2)));
}
void BM_DeficitParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(gamma_deficit(deficit_input(), make_rational(3, 2)));
}

void BM_IAlphaSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::i_alpha_exact(iso_input(), make_rational(1, 2)));
}
void BM_IAlphaParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(i_alpha_exact(iso_input(), make_rational(1, 2)));
}

void BM_TableSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::verify_table(6, expansion_table()));
}
void BM_TableParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(verify_table(6, expansion_table()));
}

void BM_WsatSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::wsat_exact(7, complete_graph(4)));
}
void BM_WsatParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(wsat_exact(7, complete_graph(4)));
}

}  // namespace

BENCHMARK(BM_GammaBruteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaBruteParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeficitSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeficitParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IAlphaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IAlphaParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WsatSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WsatParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
