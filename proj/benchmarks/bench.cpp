#include <benchmark/benchmark.h>

#include "partid/bijection.hpp"
#include "partid/enumeration.hpp"
#include "partid/qseries.hpp"

using namespace partid;

static void BM_EnumerateDst(benchmark::State& state) {
    FamilySpec spec{Family::D_st, 5, 2};
    long long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_family(n, spec));
}
BENCHMARK(BM_EnumerateDst)->Arg(30)->Arg(60)->Arg(90);

static void BM_CountTableDst(benchmark::State& state) {
    FamilySpec spec{Family::D_st, 3, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(count_table(state.range(0), spec));
}
BENCHMARK(BM_CountTableDst)->Arg(40)->Arg(80);

static void BM_ProductSide(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(product_side(5, state.range(0)));
}
BENCHMARK(BM_ProductSide)->Arg(150)->Arg(300);

static void BM_SumSide(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_side(5, state.range(0)));
}
BENCHMARK(BM_SumSide)->Arg(150)->Arg(300);

static void BM_ForwardMap(benchmark::State& state) {
    SemigroupParams params(2, 7);
    Partition pi({84, 70, 66, 46, 40, 38, 35, 14, 10, 8, 7, 4, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(forward_map(pi, params));
}
BENCHMARK(BM_ForwardMap);

BENCHMARK_MAIN();
