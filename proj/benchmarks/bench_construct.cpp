#include <benchmark/benchmark.h>

#include "aliquot/construct.hpp"
#include "aliquot/fiber.hpp"

using namespace aliquot;

static void BM_collision_search(benchmark::State& state) {
    const u64 bound = (u64)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(collision_search(1, 3, bound));
}
BENCHMARK(BM_collision_search)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_cluster_witness(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cluster_witness(Rational(2), Rational(9, 10), 2, (u64)state.range(0), false));
}
BENCHMARK(BM_cluster_witness)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_untouchables(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(untouchables_up_to((u64)state.range(0)));
}
BENCHMARK(BM_untouchables)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_fiber_scan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fiber_scan(154, (u64)state.range(0)));
}
BENCHMARK(BM_fiber_scan)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
