#include <benchmark/benchmark.h>

#include <random>

#include "celliep/celliep.hpp"

using namespace celliep;

namespace {

PositiveVector random_vector(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  return PositiveVector(x);
}

/// k groups of equal size covering n entries.
PositiveVector grouped_vector(std::size_t n, std::size_t k) {
  std::vector<double> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(1.0 + static_cast<double>(i % k));
  return PositiveVector(x);
}

void BM_eig_symmetric(benchmark::State& state) {
  const Matrix d = construct_cell_matrix(random_vector(state.range(0))).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(eig_symmetric(d));
}
BENCHMARK(BM_eig_symmetric)->Arg(10)->Arg(50)->Arg(100)->Arg(200);

void BM_reduce_grouped(benchmark::State& state) {
  const PositiveVector x = grouped_vector(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_grouped(x));
}
BENCHMARK(BM_reduce_grouped)->Arg(10)->Arg(50)->Arg(200);

void BM_spectrum_via_reduction(benchmark::State& state) {
  const PositiveVector x = grouped_vector(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_via_reduction(x));
}
BENCHMARK(BM_spectrum_via_reduction)->Arg(10)->Arg(50)->Arg(200);

void BM_char_poly(benchmark::State& state) {
  const Matrix d = construct_cell_matrix(random_vector(state.range(0))).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(d));
}
BENCHMARK(BM_char_poly)->Arg(3)->Arg(8)->Arg(16)->Arg(32);

void BM_poly_roots(benchmark::State& state) {
  const Polynomial p = char_poly(construct_cell_matrix(random_vector(state.range(0))).matrix());
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_poly_roots)->Arg(3)->Arg(8)->Arg(12);

void BM_solve_grouped(benchmark::State& state) {
  std::vector<double> tails;
  std::vector<std::size_t> mult;
  for (long i = 0; i < state.range(0); ++i) {
    tails.push_back(-2.0 - static_cast<double>(i));
    mult.push_back(4);
  }
  const GroupedSpec g(tails, mult);
  for (auto _ : state) benchmark::DoNotOptimize(solve_grouped(g));
}
BENCHMARK(BM_solve_grouped)->Arg(1)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
