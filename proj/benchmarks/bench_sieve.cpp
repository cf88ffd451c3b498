#include <benchmark/benchmark.h>

#include "aliquot/sieve.hpp"

using namespace aliquot;

static void BM_sieve_block_low(benchmark::State& state) {
    const u64 n = (u64)state.range(0);
    auto base = primes_up_to(65536);
    for (auto _ : state) benchmark::DoNotOptimize(sieve_block(1, n, base));
    state.SetItemsProcessed(state.iterations() * (int64_t)n);
}
BENCHMARK(BM_sieve_block_low)->Arg(1 << 16)->Arg(1 << 20);

static void BM_sieve_block_high(benchmark::State& state) {
    // a block far from the origin, where per-prime passes dominate
    const u64 lo = 1000000000000ull;
    const u64 n = (u64)state.range(0);
    auto base = primes_up_to(1000001);
    for (auto _ : state) benchmark::DoNotOptimize(sieve_block(lo, lo + n - 1, base));
    state.SetItemsProcessed(state.iterations() * (int64_t)n);
}
BENCHMARK(BM_sieve_block_high)->Arg(1 << 20);

static void BM_sieve_scan_sum(benchmark::State& state) {
    const u64 x = (u64)state.range(0);
    for (auto _ : state) {
        u128 sum = 0;
        sieve_scan(x, [&](u64, u64 sigma, u64, u64) { sum += sigma; });
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t)x);
}
BENCHMARK(BM_sieve_scan_sum)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_parallel_scan(benchmark::State& state) {
    const u64 x = 10000000;
    const unsigned threads = (unsigned)state.range(0);
    for (auto _ : state) {
        std::vector<u128> partial((x - 1) / kDefaultBlockSize + 1, 0);
        for_each_block_parallel(x, threads, kDefaultBlockSize,
                                [&](std::size_t i, const SieveBlock& b) {
                                    u128 acc = 0;
                                    for (u64 n = b.lo; n <= b.hi; ++n) acc += b.sigma_of(n);
                                    partial[i] = acc;
                                });
        u128 total = 0;
        for (u128 v : partial) total += v;
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t)x);
}
BENCHMARK(BM_parallel_scan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
