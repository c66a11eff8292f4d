#include <benchmark/benchmark.h>

#include "concavekit/rng.hpp"
#include "concavekit/truncated_series.hpp"

using namespace concavekit;

namespace {

TruncatedSeries random_series(std::size_t order, std::uint64_t seed, bool unit_constant) {
    Rng rng(seed);
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n] = rng.in_disk(1.0 / static_cast<double>(n + 1));
    }
    if (unit_constant) c[0] = Complex(1.0, 0.0);
    return TruncatedSeries(std::move(c));
}

void BM_Mul(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries a = random_series(order, 1, false);
    const TruncatedSeries b = random_series(order, 2, false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mul)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_Div(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries a = random_series(order, 3, false);
    const TruncatedSeries b = random_series(order, 4, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(div(a, b));
    }
}
BENCHMARK(BM_Div)->RangeMultiplier(2)->Range(32, 512);

void BM_Exp(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries a = random_series(order, 5, false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(concavekit::exp(a));
    }
}
BENCHMARK(BM_Exp)->RangeMultiplier(2)->Range(32, 512);

void BM_PowReal(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries a = random_series(order, 6, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pow_real(a, 1.75));
    }
}
BENCHMARK(BM_PowReal)->RangeMultiplier(2)->Range(32, 512);

void BM_Evaluate(benchmark::State& state) {
    const TruncatedSeries a = random_series(static_cast<std::size_t>(state.range(0)), 7, false);
    const Complex z(0.6, 0.35);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(a, z));
    }
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(2)->Range(32, 512);

}  // namespace

BENCHMARK_MAIN();
