#include <benchmark/benchmark.h>

#include "bjorth/bj.hpp"
#include "bjorth/random.hpp"

using namespace bjorth;

namespace {

std::pair<ComplexMatrix, ComplexMatrix> pair_for(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return {rng.matrix(n, n), rng.matrix(n, n)};
}

void bm_criterion(benchmark::State& state) {
    const auto [A, B] = pair_for(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(bj_orthogonal_criterion(A, B, false).margin);
}

void bm_minimize(benchmark::State& state) {
    const auto [A, B] = pair_for(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(bj_orthogonal_minimize(A, B).margin);
}

void bm_numrange(benchmark::State& state) {
    Rng rng(9);
    const ComplexMatrix M = rng.matrix(static_cast<std::size_t>(state.range(0)),
                                       static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zero_in_numrange(M).margin);
}

} // namespace

BENCHMARK(bm_criterion)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_minimize)->Arg(2)->Arg(4);
BENCHMARK(bm_numrange)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
