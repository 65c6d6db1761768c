// Microbenchmarks for the hot paths: clique enumeration on dense and
// sparse relations, exhaustive verification, and the generators.

#include <benchmark/benchmark.h>

#include "tolrel/boundaries.hpp"
#include "tolrel/generators.hpp"
#include "tolrel/harness.hpp"
#include "tolrel/tolerance.hpp"

using namespace tolrel;

static void BM_ToleranceClasses(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    double p = static_cast<double>(state.range(1)) / 100.0;
    auto rel = random_relation(StateSpace::numbered(n), p, 1234);
    std::size_t classes = 0;
    for (auto _ : state) {
        auto out = tolerance_classes(rel);
        classes = out.size();
        benchmark::DoNotOptimize(out);
    }
    state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK(BM_ToleranceClasses)
    ->Args({16, 30})
    ->Args({32, 30})
    ->Args({64, 30})
    ->Args({32, 70})
    ->Args({64, 70});

static void BM_Census(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto report = census(n);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Census)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyProposition1(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto report = verify_proposition(1, n);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyProposition1)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyProposition2(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto report = verify_proposition(2, n);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyProposition2)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ThresholdRelation(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(99);
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(rng.next_unit());
    StateSpace space = StateSpace::numbered(n);
    for (auto _ : state) {
        auto rel = threshold_relation(space, {values, 0.1});
        benchmark::DoNotOptimize(rel);
    }
}
BENCHMARK(BM_ThresholdRelation)->Arg(16)->Arg(64);

static void BM_RandomRelation(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    StateSpace space = StateSpace::numbered(n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto rel = random_relation(space, 0.5, ++seed);
        benchmark::DoNotOptimize(rel);
    }
}
BENCHMARK(BM_RandomRelation)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
