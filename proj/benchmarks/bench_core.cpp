#include <benchmark/benchmark.h>

#include "random_matrices.hpp"
#include "sftflow/dimension_groups.hpp"
#include "sftflow/flow_invariants.hpp"
#include "sftflow/suspension.hpp"

namespace {

using namespace sftflow;

IntMatrix sample(std::size_t n) {
  testing::Rng rng(n);
  return testing::random_int_matrix(rng, n, n, -5, 5);
}

void BM_Det(benchmark::State& state) {
  const IntMatrix m = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->RangeMultiplier(2)->Range(4, 32);

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_CharPoly(benchmark::State& state) {
  const IntMatrix m = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 32);

void BM_FlowInvariants(benchmark::State& state) {
  testing::Rng rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinMatrix a = testing::random_irreducible(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps_determinant(a));
    benchmark::DoNotOptimize(bowen_franks(a));
  }
}
BENCHMARK(BM_FlowInvariants)->DenseRange(4, 16, 4);

void BM_SuspensionInvariants(benchmark::State& state) {
  testing::Rng rng(8);
  const BinMatrix a = testing::random_irreducible(rng, 6, 6);
  const CeilingFunction f = CeilingFunction::constant(6, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bowen_franks(suspend(a, f)));
}
BENCHMARK(BM_SuspensionInvariants)->DenseRange(1, 4);

void BM_KroneckerSpectrum(benchmark::State& state) {
  testing::Rng rng(9);
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinMatrix a = testing::random_irreducible(rng, n, n);
  const BinMatrix b = testing::random_irreducible(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_spectrum_equal(a, b));
}
BENCHMARK(BM_KroneckerSpectrum)->DenseRange(2, 5);

void BM_QuadrupletFixedPoint(benchmark::State& state) {
  testing::Rng rng(10);
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinMatrix a = testing::random_irreducible(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(quad_equal(delta_tilde(u_tilde(a)), u_tilde(a)));
}
BENCHMARK(BM_QuadrupletFixedPoint)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
