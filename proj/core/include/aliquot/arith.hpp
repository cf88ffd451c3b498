#ifndef ALIQUOT_ARITH_HPP
#define ALIQUOT_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aliquot {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

struct PrimePower {
    u64 prime;
    std::uint32_t exp;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition of n. factors empty iff n == 1; primes
// strictly increasing, exponents >= 1.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    u64 product() const;
};

// sigma, s, tau, omega, rad, largest/smallest prime factor and the
// squarefull part of one n, all exact.
struct ArithProfile {
    u64 n = 1;
    u64 sigma = 1;
    u64 s = 0;             // sigma - n
    std::uint32_t tau = 1;
    std::uint32_t omega = 0;
    u64 rad = 1;
    u64 largest_prime = 0;   // 0 when n == 1
    u64 smallest_prime = 0;  // 0 when n == 1
    u64 squarefull_part = 1;
};

// Deterministic 64-bit Miller-Rabin.
bool is_prime(u64 n);

// Trial division below 2^16, then Brent's rho for the remaining cofactor.
// Throws std::domain_error on n == 0.
Factorization factorize(u64 n);

ArithProfile profile(u64 n);
ArithProfile profile(const Factorization& f);

// sigma(n) from a factorization; 128-bit intermediates, throws
// std::overflow_error if the result does not fit 64 bits.
u64 sigma_of(const Factorization& f);

// s(de) = sigma(d) s(e) + s(d) e for coprime d, e. Both sides evaluated
// independently. Throws std::invalid_argument when gcd(d,e) > 1.
bool check_coprime_split_identity(u64 d, u64 e);

// s(n0) s(n0 p q) = (s(n0) p + sigma(n0)) (s(n0) q + sigma(n0))
//                   + s(n0) sigma(n0) - sigma(n0)^2
// for distinct primes p, q not dividing n0.
bool check_analogue_identity(u64 n0, u64 p, u64 q);

// With T = sigma(n0) - k n0 and n = n0 p q:
// T (sigma(n) - k n) = (T p + sigma(n0)) (T q + sigma(n0))
//                      + T sigma(n0) - sigma(n0)^2
bool check_analogue2_identity(u64 n0, u64 p, u64 q, u64 k);

// s(n0 p q) = s(n0) p q + sigma(n0) (p + q + 1), evaluated directly.
u64 s_of_semiprime_expansion(u64 n0, u64 p, u64 q);

// All divisors of n, sorted ascending.
std::vector<u64> divisors(const Factorization& f);

}  // namespace aliquot

#endif
