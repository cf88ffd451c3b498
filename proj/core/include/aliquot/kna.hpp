#ifndef ALIQUOT_KNA_HPP
#define ALIQUOT_KNA_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aliquot/arith.hpp"

namespace aliquot {

// sigma(n) == k * n, exactly.
bool is_k_perfect(u64 n, u64 k);

// A solution n <= x of sigma(n) = k n + a. Regular means n = p m with
// p prime, p not dividing m, sigma(m) = k m and sigma(m) = a; everything
// else is sporadic.
struct KnaSolution {
    u64 n = 0;
    u64 k = 0;
    i64 a = 0;
    bool regular = false;
    std::optional<std::pair<u64, u64>> regular_decomposition;  // (p, m)
};

// The regular solutions up to x: empty unless a > 0, k >= 1, k | a and
// m = a/k is k-perfect; then they are exactly {p m : p prime, p ∤ m,
// p m <= x}.
std::vector<u64> regular_solutions(u64 k, i64 a, u64 x);

// Full census of sigma(n) = k n + a over n <= x, k >= 0, classified.
std::vector<KnaSolution> solutions(u64 k, i64 a, u64 x);

// Sporadic counts at each x in the ascending list, with the x^{3/5}
// envelope value for reporting.
struct SporadicPoint {
    u64 x = 0;
    u64 sporadic_count = 0;
    double envelope = 0.0;  // x^{3/5}
};
std::vector<SporadicPoint> sporadic_count_profile(u64 k, i64 a, const std::vector<u64>& x_list);

// All n in [2, x] with sigma(n) == a (mod n), canonical residue.
struct CongruenceCensus {
    i64 a = 0;
    u64 x = 0;
    std::vector<u64> solutions;
    u64 count = 0;
    double normalized = 0.0;  // count / (x / ln x)
};
CongruenceCensus congruence_census(i64 a, u64 x);

struct CongruenceSweepRow {
    i64 a = 0;
    u64 count = 0;
    double normalized = 0.0;
};
// One census per a; rows in input order; also usable to read off the max.
std::vector<CongruenceSweepRow> congruence_uniformity_sweep(const std::vector<i64>& a_list, u64 x);

}  // namespace aliquot

#endif
