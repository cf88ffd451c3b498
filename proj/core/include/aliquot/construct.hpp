#ifndef ALIQUOT_CONSTRUCT_HPP
#define ALIQUOT_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aliquot/arith.hpp"
#include "aliquot/rational.hpp"

namespace aliquot {

struct not_found_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value of (b p + a)(b q + a) hit by two or more distinct prime pairs.
struct CollisionWitness {
    i64 b = 1;
    i64 a = 0;
    i64 k_value = 0;
    std::vector<std::pair<u64, u64>> pairs;  // p < q, each pair distinct
    u64 multiplicity() const { return pairs.size(); }
};

// Buckets (b p + a)(b q + a) over unordered pairs of distinct primes
// p < q <= prime_bound (restricted to primes accepted by the filter) and
// returns every value hit at least twice, sorted by multiplicity
// descending, then value ascending. Products evaluated in signed 128-bit
// and rejected if they leave 64 bits.
std::vector<CollisionWitness> collision_search(
    i64 b, i64 a, u64 prime_bound,
    const std::function<bool(u64)>& prime_filter = nullptr);

// Smallest n0 in [2, search_bound] with
//   s(n0)/n0 in (alpha^-1 (1 - eps/2), alpha^-1 (1 + eps/2)),
// compared in exact rational arithmetic. Throws not_found_error when the
// window is empty up to the bound.
u64 find_ratio_seed(const Rational& alpha, const Rational& epsilon, u64 search_bound);

// Target m with several s-preimages n0*p*q clustered in the window
// ((1-eps) alpha m, (1+eps) alpha m).
struct ClusterWitness {
    u64 n0 = 0;
    Rational alpha, epsilon;
    i64 k_value = 0;
    u64 m = 0;
    std::vector<std::pair<u64, u64>> pairs;
    std::vector<u64> preimages;  // n0 * p * q, sorted
    u64 window_lower = 0, window_upper = 0;  // integer bracketing of the open window
    std::vector<std::string> waived_constraints;
};

// Realizes the collision construction with b = s(n0), a = sigma(n0):
// picks the max-multiplicity collision value among admissible primes
// (coprime to n0 and, unless relax_thresholds, above the proof
// threshold max{n0, 12 sigma(n0) / (eps s(n0))}), derives
// m = (k + s(n0) sigma(n0) - sigma(n0)^2) / s(n0), and verifies every
// preimage both by direct evaluation of s and by the product identity.
// epsilon is clamped into (0,1).
ClusterWitness cluster_witness(const Rational& alpha, const Rational& epsilon, u64 n0,
                               u64 prime_bound, bool relax_thresholds = false);

// Many-solution target a for sigma(n) = k n + a built from a seed n0
// with sigma(n0)/n0 > 2k and T = sigma(n0) - k n0.
struct KnaWitness {
    u64 k = 1;
    u64 n0 = 0;
    i64 T = 0;
    i64 a = 0;
    i64 k_value = 0;
    std::vector<std::pair<u64, u64>> pairs;
    std::vector<u64> solutions;  // n0 * p * q, sorted
};

// Selects the least n0 with sigma(n0)/n0 > 2k, then runs
// collision_search(b = T, a = sigma(n0)) over primes coprime to n0 and
// derives a = (k_value + T sigma(n0) - sigma(n0)^2) / T. Every solution
// is verified to satisfy sigma(n) = k n + a, n <= a, and to avoid the
// forms m p / m p q with m k-perfect (each has abundancy <= 2k while
// sigma(n)/n > 2k; also checked divisor by divisor).
KnaWitness kna_witness(u64 k, u64 prime_bound);

}  // namespace aliquot

#endif
