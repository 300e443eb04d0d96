#include "bundle_census/enumeration.hpp"
#include "bundle_census/numeric_oracle.hpp"
#include "bundle_census/sweep.hpp"
#include "bundle_census/symfun.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bundle_census;

namespace {

std::vector<BigInt> random_classes(std::size_t n, int bound, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<BigInt> c(n);
    for (auto& x : c) x = dist(rng);
    return c;
}

} // namespace

static void BinomialSums(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto classes = random_classes(n, 20, 1);
    for (auto _ : state) benchmark::DoNotOptimize(binomial_sums(classes, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BinomialSums)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void CountCorankOne(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ChernVector v(n, n + 1, random_classes(n, 6, 2));
    for (auto _ : state) benchmark::DoNotOptimize(count_bundles(v));
}
BENCHMARK(CountCorankOne)->DenseRange(2, 10, 4);

static void FindRoots(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto classes = random_classes(n, 8, 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(classes));
}
BENCHMARK(FindRoots)->DenseRange(2, 10, 4);

static void SweepRankTwo(benchmark::State& state) {
    SweepSpec spec;
    spec.rank = 2;
    spec.dim = 3;
    spec.bounds = {{-20, 20}, {-20, 20}};
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, static_cast<unsigned>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * 1681);
}
BENCHMARK(SweepRankTwo)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
