#include <benchmark/benchmark.h>

#include "zxf/factorize.hpp"

using namespace zxf;

namespace {

void BM_ClassifySimpleRoot(benchmark::State& state) {
    const IntPoly f{4, 4, 3, 1};
    for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifySimpleRoot);

void BM_ClassifyInconclusive(benchmark::State& state) {
    const IntPoly f = IntPoly{7, 7, 1} * IntPoly{7, 7, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifyInconclusive);

// Certificate construction as a function of the truncation order.
void BM_FactorSimpleRoot(benchmark::State& state) {
    const IntPoly f{4, 4, 3, 1};
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factor(f, order));
}
BENCHMARK(BM_FactorSimpleRoot)->RangeMultiplier(2)->Range(16, 256);

void BM_FactorNGreaterThan2M(benchmark::State& state) {
    const IntPoly f{8, 2, 1};
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factor(f, order));
}
BENCHMARK(BM_FactorNGreaterThan2M)->RangeMultiplier(2)->Range(16, 256);

void BM_RootsInZp(benchmark::State& state) {
    const IntPoly f{8, 2, 1};
    const Prime p(2ul);
    const auto precision = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(roots_in_Zp(f, p, precision));
}
BENCHMARK(BM_RootsInZp)->RangeMultiplier(4)->Range(4, 256);

void BM_SeriesMul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Integer> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Integer(static_cast<long>(i * 7919 % 1009) - 500);
    const TruncatedSeries a(c, n), b(c, n);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(16, 512);

}  // namespace

BENCHMARK_MAIN();
