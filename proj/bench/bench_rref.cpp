// Row reduction: OpenMP kernel against the serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "sgk/glin.hpp"

using namespace sgk;

namespace {

Matrix random_matrix(std::size_t n, const Field& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(n, n + n / 4);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.add(Scalar(d(rng)), 0);
  return m;
}

template <RrefResult (*Kernel)(const Matrix&, const Field&)>
void run(benchmark::State& state, const Field& f) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), f, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, f));
}

void BM_rref_prime(benchmark::State& s) { run<rref>(s, Field::prime(32003)); }
void BM_rref_reference_prime(benchmark::State& s) { run<rref_reference>(s, Field::prime(32003)); }
void BM_rref_rational(benchmark::State& s) { run<rref>(s, Field::rationals()); }
void BM_rref_reference_rational(benchmark::State& s) { run<rref_reference>(s, Field::rationals()); }

}  // namespace

BENCHMARK(BM_rref_prime)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_reference_prime)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_rational)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_reference_rational)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
