#include "zerosum/builders.hpp"
#include "zerosum/canonical.hpp"
#include "zerosum/decompose.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/search.hpp"

#include <benchmark/benchmark.h>

using namespace zerosum;

static void BM_HasZeroWindow(benchmark::State& state) {
    const ZnContext ctx(static_cast<Value>(state.range(0)));
    const auto w = WeightSet::units_pow(ctx, 2);
    const Seq s = build(default_recipe(Family::UnitsSquared, ctx));
    for (auto _ : state) benchmark::DoNotOptimize(has_zero_window(s, w));
}
BENCHMARK(BM_HasZeroWindow)->Arg(49)->Arg(77)->Arg(343)->Arg(2401);

static void BM_ComputeConstant(benchmark::State& state) {
    const ZnContext ctx(static_cast<Value>(state.range(0)));
    const auto w = WeightSet::units_pow(ctx, static_cast<unsigned>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_constant(ctx, w).constant);
}
BENCHMARK(BM_ComputeConstant)->Args({35, 1})->Args({49, 2})->Args({77, 2})->Args({95, 3})->Unit(benchmark::kMillisecond);

static void BM_CountExtremal(benchmark::State& state) {
    const ZnContext ctx(49);
    const auto w = WeightSet::units_pow(ctx, 2);
    EnumerateOptions options;
    options.count_only = true;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_extremal(ctx, w, 9, options).count);
}
BENCHMARK(BM_CountExtremal)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
    const ZnContext ctx(95 * 11);
    const Seq s = random_extremal(Family::UnitsCubed, ctx, 1);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(s, Family::UnitsCubed, ctx));
}
BENCHMARK(BM_Decompose);

static void BM_Canonicalize(benchmark::State& state) {
    const ZnContext ctx(77);
    const auto w = WeightSet::units_pow(ctx, 2);
    const Seq s = build(default_recipe(Family::UnitsSquared, ctx));
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(s, w));
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMillisecond);

static void BM_RandomExtremal(benchmark::State& state) {
    const ZnContext ctx(3 * 5 * 7 * 11 * 13);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(random_extremal(Family::Units, ctx, seed++));
}
BENCHMARK(BM_RandomExtremal);
BENCHMARK_MAIN();
