#include <benchmark/benchmark.h>

#include "concavekit/functionals.hpp"
#include "concavekit/rng.hpp"

using namespace concavekit;

namespace {

void BM_FromSchwarz(benchmark::State& state) {
    const ConcaveParams params(1.5);
    Rng rng(11);
    const SchwarzFunction omega = SchwarzFunction::random(rng);
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ConcaveFunction::from_schwarz(params, omega, order));
    }
}
BENCHMARK(BM_FromSchwarz)->RangeMultiplier(2)->Range(32, 256);

void BM_Membership(benchmark::State& state) {
    const ConcaveParams params(1.5);
    Rng rng(12);
    const ConcaveFunction f =
        ConcaveFunction::from_schwarz(params, SchwarzFunction::random(rng), 128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(membership_test(f));
    }
}
BENCHMARK(BM_Membership);

void BM_NormEstimateClosedForm(benchmark::State& state) {
    const ConcaveFunction g0 = ConcaveFunction::extremal_g_theta(ConcaveParams(2.0), 0.0, 128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_estimate(g0, 0.999));
    }
}
BENCHMARK(BM_NormEstimateClosedForm);

void BM_NormEstimateSeries(benchmark::State& state) {
    const ConcaveParams params(1.5);
    Rng rng(13);
    const ConcaveFunction f =
        ConcaveFunction::from_schwarz(params, SchwarzFunction::random(rng), 128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_estimate(f, 0.85, RefinementSpec{24, 48, 1, 24}));
    }
}
BENCHMARK(BM_NormEstimateSeries);

}  // namespace
