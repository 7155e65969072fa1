#include <benchmark/benchmark.h>

#include <random>

#include "akh/harmonic.hpp"
#include "akh/identity_ledger.hpp"
#include "akh/matrix.hpp"
#include "akh/obstructions.hpp"
#include "akh/operators.hpp"

namespace {

const char* const kModels[] = {"torus4", "kodaira_thurston", "filiform4_J", "h5_J", "torus6"};

void BM_BuildSuite(benchmark::State& state) {
  const auto model = akh::catalog(kModels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(akh::OperatorSuite::build(model));
  state.SetLabel(kModels[state.range(0)]);
}
BENCHMARK(BM_BuildSuite)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IdentityLedger(benchmark::State& state) {
  const auto ops = akh::OperatorSuite::build(akh::catalog(kModels[state.range(0)]));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(akh::verify_identities(ops, threads));
  state.SetLabel(kModels[state.range(0)]);
}
BENCHMARK(BM_IdentityLedger)->ArgsProduct({{1, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Diamond(benchmark::State& state) {
  const auto ops = akh::OperatorSuite::build(akh::catalog(kModels[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(akh::ell_diamond(ops));
  state.SetLabel(kModels[state.range(0)]);
}
BENCHMARK(BM_Diamond)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Obstructions(benchmark::State& state) {
  const auto ops = akh::OperatorSuite::build(akh::catalog("filiform4_J"));
  for (auto _ : state) benchmark::DoNotOptimize(akh::obstructions(ops));
}
BENCHMARK(BM_Obstructions)->Unit(benchmark::kMillisecond);

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-3, 3);
  akh::ExactMatrix m(n, n + 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n + 2; ++c) m(r, c) = akh::GaussScalar(mpq_class(entry(rng)), mpq_class(entry(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(akh::kernel(m));
}
BENCHMARK(BM_Kernel)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
