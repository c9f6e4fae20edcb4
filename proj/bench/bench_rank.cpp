// Serial reference elimination against the OpenMP kernel on the matrices the
// experiments actually build: m_r for typical lengths and dense random ones.

#include <benchmark/benchmark.h>

#include "soslen/elimination.hpp"
#include "soslen/monomial.hpp"
#include "soslen/random.hpp"

using namespace soslen;

namespace {

PrimeMatrix dense(std::uint64_t p, std::size_t rows, std::size_t cols) {
  const PrimeField F(p);
  Rng rng(rows * 131 + cols);
  PrimeMatrix m(F, rows, cols);
  for (auto& x : m.data()) x = rng.below(p);
  return m;
}

// Rows f_i * x^b for r random degree-d forms in n variables.
PrimeMatrix ideal_matrix(std::uint64_t p, int n, int d, int r) {
  const PrimeField F(p);
  Rng rng(static_cast<std::uint64_t>(n * 1000 + d * 10 + r));
  const std::size_t Nd = num_monomials(n, d);
  const ProductTable& table = product_table(n, d, d);
  PrimeMatrix m(F, static_cast<std::size_t>(r) * Nd, num_monomials(n, 2 * d));
  for (int i = 0; i < r; ++i) {
    std::vector<std::uint64_t> f(Nd);
    for (auto& c : f) c = rng.below(p);
    for (std::size_t beta = 0; beta < Nd; ++beta) {
      auto row = m.row(static_cast<std::size_t>(i) * Nd + beta);
      for (std::size_t alpha = 0; alpha < Nd; ++alpha) row[table.index(alpha, beta)] = f[alpha];
    }
  }
  return m;
}

template <std::size_t (*Rank)(PrimeMatrix)>
void BM_dense(benchmark::State& state) {
  const auto m = dense(static_cast<std::uint64_t>(state.range(1)), static_cast<std::size_t>(state.range(0)),
                       static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Rank(m));
  state.SetComplexityN(state.range(0));
}

template <std::size_t (*Rank)(PrimeMatrix)>
void BM_ideal(benchmark::State& state) {
  const auto m = ideal_matrix(kMersenne61, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                              static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(Rank(m));
}

void dense_args(benchmark::internal::Benchmark* b) {
  for (std::int64_t size : {128, 256, 512}) {
    for (std::int64_t p : {static_cast<std::int64_t>(kMersenne31), static_cast<std::int64_t>(kMersenne61),
                           std::int64_t{1000000007}}) {
      b->Args({size, p});
    }
  }
}

}  // namespace

BENCHMARK(BM_dense<rank_mod_p_serial>)->Apply(dense_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dense<rank_mod_p>)->Apply(dense_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ideal<rank_mod_p_serial>)->Args({4, 6, 6})->Args({4, 8, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ideal<rank_mod_p>)->Args({4, 6, 6})->Args({4, 8, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
