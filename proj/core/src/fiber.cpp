#include "aliquot/fiber.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "aliquot/sieve.hpp"

namespace aliquot {

FiberReport fiber_scan(u64 m, u64 x) {
    if (x < 1) throw std::invalid_argument("fiber_scan: x must be >= 1");
    FiberReport r;
    r.m = m;
    r.x = x;
    if (m == 1) r.infinite = true;
    sieve_scan(x, [&](u64 n, u64, u64 s, u64) {
        if (s == m) r.preimages.push_back(n);
    });
    if (m == 0) {
        r.complete_for_all_n = true;  // s(n) >= 1 for n >= 2
    } else if (m >= 2) {
        r.complete_for_all_n = (u128)x >= (u128)m * m;
    }
    return r;
}

std::vector<u64> fiber_semiprime(u64 m) {
    if (m < 3) throw std::invalid_argument("fiber_semiprime: m must be >= 3");
    std::vector<u64> out;
    // s(pq) = p + q + 1, so p + q = m - 1 with p < q
    for (u64 p = 2; 2 * p < m - 1; ++p) {
        u64 q = m - 1 - p;
        if (is_prime(p) && is_prime(q)) out.push_back(p * q);
    }
    // s(p^2) = p + 1
    if (is_prime(m - 1)) out.push_back((m - 1) * (m - 1));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> untouchables_up_to(u64 y) {
    if (y < 2) throw std::invalid_argument("untouchables_up_to: y must be >= 2");
    if (y > (u64)1 << 30) throw std::overflow_error("untouchables_up_to: y^2 out of range");
    // m = 0 is hit by n = 1 and m = 1 by every prime; any composite
    // preimage of m <= y satisfies n <= m^2 <= y^2.
    std::vector<bool> hit(y + 1, false);
    sieve_scan(y * y, [&](u64 n, u64, u64 s, u64 spf) {
        if (n >= 2 && spf != n && s <= y) hit[s] = true;
    });
    std::vector<u64> out;
    for (u64 m = 2; m <= y; ++m)
        if (!hit[m]) out.push_back(m);
    return out;
}

std::vector<std::pair<u64, u64>> max_multiplicity_targets(u64 x, u64 min_m) {
    if (x < 2) throw std::invalid_argument("max_multiplicity_targets: x must be >= 2");
    std::unordered_map<u64, u64> counts;
    counts.reserve((std::size_t)std::min<u64>(x, 1u << 22));
    sieve_scan(x, [&](u64, u64, u64 s, u64) {
        if (s >= min_m) ++counts[s];
    });
    u64 best = 0;
    for (const auto& [m, c] : counts) best = std::max(best, c);
    std::vector<std::pair<u64, u64>> out;
    for (const auto& [m, c] : counts)
        if (c == best) out.emplace_back(m, c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aliquot
