#ifndef ALIQUOT_FIBER_HPP
#define ALIQUOT_FIBER_HPP

#include <cstdint>
#include <vector>

#include "aliquot/arith.hpp"

namespace aliquot {

// Complete fiber s^{-1}(m) intersected with [1, x].
struct FiberReport {
    u64 m = 0;
    u64 x = 0;
    std::vector<u64> preimages;       // sorted, duplicate-free
    bool complete_for_all_n = false;  // no preimage beyond x can exist
    bool infinite = false;            // m == 1: every prime is a preimage
};

// All n <= x with s(n) = m. Completeness uses the bound n <= m^2 for
// composite preimages (a composite n has a proper divisor >= sqrt(n),
// so s(n) >= sqrt(n)); the m = 1 fiber is the primes and is flagged
// infinite instead.
FiberReport fiber_scan(u64 m, u64 x);

// Preimages of m of the form p*q (p < q primes) plus the p^2 branch
// s(p^2) = p + 1. Requires m >= 3.
std::vector<u64> fiber_semiprime(u64 m);

// All untouchable m in [2, y]: values with no s-preimage at all.
// Certified by a complete scan of composite n <= y^2 together with
// s(1) = 0 and s(prime) = 1.
std::vector<u64> untouchables_up_to(u64 y);

// Targets m attaining the maximum of #{n <= x : s(n) = m}, with that
// count. min_m lets callers skip the prime-dominated m = 1 bucket.
std::vector<std::pair<u64, u64>> max_multiplicity_targets(u64 x, u64 min_m = 0);

}  // namespace aliquot

#endif
