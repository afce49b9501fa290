// Serial vs OpenMP row reduction on random dense matrices.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "towerdepth/matrix.hpp"

namespace {

template <class T>
td::ExactMatrix<T> random_matrix(const td::FieldSpec& f, std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  td::ExactMatrix<T> m(f, n, n + n / 2);
  for (auto& x : m.entries) x = td::Scalar<T>::from_int(f, d(rng));
  return m;
}

template <class T, bool Parallel>
void bm_rref(benchmark::State& state, td::FieldSpec f) {
  auto m = random_matrix<T>(f, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto r = Parallel ? td::rref_parallel(m) : td::rref_serial(m);
    benchmark::DoNotOptimize(r.pivot_cols.data());
  }
  state.counters["threads"] = Parallel ? omp_get_max_threads() : 1;
}

void fp_serial(benchmark::State& s) { bm_rref<td::Fp, false>(s, td::FieldSpec::prime(1000003)); }
void fp_parallel(benchmark::State& s) { bm_rref<td::Fp, true>(s, td::FieldSpec::prime(1000003)); }
void q_serial(benchmark::State& s) { bm_rref<td::Rational, false>(s, td::FieldSpec::rationals()); }
void q_parallel(benchmark::State& s) { bm_rref<td::Rational, true>(s, td::FieldSpec::rationals()); }

}  // namespace

BENCHMARK(fp_serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(fp_parallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(q_serial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(q_parallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
