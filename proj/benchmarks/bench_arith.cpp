#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "aliquot/arith.hpp"

using namespace aliquot;

static void BM_factorize_random(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const u64 span = (u64)state.range(0);
    std::vector<u64> inputs(1024);
    for (auto& v : inputs) v = 2 + rng() % span;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(inputs[i++ & 1023]));
    }
}
BENCHMARK(BM_factorize_random)->Arg(1 << 20)->Arg(1ull << 40)->Arg(1ull << 60);

static void BM_factorize_semiprime(benchmark::State& state) {
    // worst case for rho: product of two primes near 2^31
    const u64 n = 2147483647ull * 2147483629ull;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize_semiprime);

static void BM_is_prime(benchmark::State& state) {
    u64 n = 1000000000000000003ull;
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(n));
}
BENCHMARK(BM_is_prime);

static void BM_profile(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<u64> inputs(1024);
    for (auto& v : inputs) v = 2 + rng() % 1000000000;
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(profile(inputs[i++ & 1023]));
}
BENCHMARK(BM_profile);
