#include "nilform/catalog.hpp"
#include "nilform/derivations.hpp"
#include "nilform/invariants.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace nilform;

namespace {

// family 12 exists for every m >= 4
LieAlgebra sample(std::int64_t n) { return build(12, static_cast<int>(n / 2)); }

void BM_JacobiSerial(benchmark::State& state) {
    const LieAlgebra g = sample(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_check_serial(g));
}

void BM_JacobiParallel(benchmark::State& state) {
    const LieAlgebra g = sample(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(g));
}

void BM_DerivationsSerial(benchmark::State& state) {
    const LieAlgebra g = sample(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(derivation_space_serial(g).dim());
}

void BM_DerivationsParallel(benchmark::State& state) {
    const LieAlgebra g = sample(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(derivation_space(g).dim());
}

void BM_FingerprintSweepSerial(benchmark::State& state) {
    const auto insts = enumerate(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial_map(insts.size(), [&](std::size_t i) { return fingerprint(insts[i].algebra); }));
}

void BM_FingerprintSweepParallel(benchmark::State& state) {
    const auto insts = enumerate(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel_map(insts.size(), [&](std::size_t i) { return fingerprint(insts[i].algebra); }));
}

}  // namespace

BENCHMARK(BM_JacobiSerial)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivationsSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivationsParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FingerprintSweepSerial)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_FingerprintSweepParallel)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
