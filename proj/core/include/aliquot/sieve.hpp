#ifndef ALIQUOT_SIEVE_HPP
#define ALIQUOT_SIEVE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "aliquot/arith.hpp"

namespace aliquot {

inline constexpr u64 kDefaultBlockSize = 1u << 20;

// All primes <= limit by a plain Eratosthenes sieve.
std::vector<u64> primes_up_to(u64 limit);

// One contiguous range with per-n smallest prime factor, sigma and s.
// Index i corresponds to n = lo + i.
struct SieveBlock {
    u64 lo = 1, hi = 1;
    std::vector<u64> spf;    // spf[i] == n iff n prime (n >= 2); spf of 1 is 1
    std::vector<u64> sigma;
    std::vector<u64> s;

    u64 size() const { return hi - lo + 1; }
    u64 spf_of(u64 n) const { return spf[n - lo]; }
    u64 sigma_of(u64 n) const { return sigma[n - lo]; }
    u64 s_of(u64 n) const { return s[n - lo]; }
};

// base_primes must contain every prime <= sqrt(hi); throws
// std::invalid_argument otherwise.
SieveBlock sieve_block(u64 lo, u64 hi, const std::vector<u64>& base_primes);

// Visits (n, sigma, s, spf) for every n in [1, x], in increasing n.
template <class Visitor>
void sieve_scan(u64 x, Visitor&& visit, u64 block_size = kDefaultBlockSize) {
    u64 root = 1;
    while ((root + 1) * (root + 1) <= x) ++root;
    auto base = primes_up_to(root);
    for (u64 lo = 1; lo <= x; lo += block_size) {
        u64 hi = std::min(x, lo + block_size - 1);
        SieveBlock b = sieve_block(lo, hi, base);
        for (u64 n = lo; n <= hi; ++n)
            visit(n, b.sigma[n - lo], b.s[n - lo], b.spf[n - lo]);
    }
}

// Runs fn over every block covering [1, x], possibly from several
// threads. Blocks are identified by index (block i covers
// [1 + i*block_size, ...]); callers keep per-block state indexed by it,
// which makes aggregation order-independent and the result
// deterministic regardless of thread count.
void for_each_block_parallel(u64 x, unsigned threads, u64 block_size,
                             const std::function<void(std::size_t, const SieveBlock&)>& fn);

// Little-endian (n, sigma) u64 records, preceded by a 32-byte header.
void write_block_dump(std::ostream& out, const SieveBlock& b);
bool read_block_dump(std::istream& in, SieveBlock& b);  // spf not stored; left empty

// Same record format covering [1, x], sieved and written block by block
// so memory stays at one block.
void write_range_dump(std::ostream& out, u64 x, u64 block_size = kDefaultBlockSize);

// Independent oracle: sum_{n<=x} sigma(n) = sum_{d<=x} d*floor(x/d).
u128 sigma_sum_hyperbola(u64 x);

}  // namespace aliquot

#endif
