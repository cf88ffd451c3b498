#include "aliquot/kna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aliquot/sieve.hpp"

namespace aliquot {

bool is_k_perfect(u64 n, u64 k) {
    if (n < 1 || k < 1) throw std::invalid_argument("is_k_perfect: n, k must be >= 1");
    return (u128)profile(n).sigma == (u128)k * n;
}

std::vector<u64> regular_solutions(u64 k, i64 a, u64 x) {
    std::vector<u64> out;
    if (k < 1 || a <= 0 || (u64)a % k != 0) return out;
    u64 m = (u64)a / k;
    if (!is_k_perfect(m, k)) return out;  // sigma(m) = km = a is then automatic
    for (u64 p = 2; (u128)p * m <= x; ++p) {
        if (!is_prime(p) || m % p == 0) continue;
        out.push_back(p * m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Regular test without materializing the full regular set: n is regular
// iff n = p m for the specific m = a/k (when that m is k-perfect).
struct RegularTester {
    bool possible = false;
    u64 m = 0;

    RegularTester(u64 k, i64 a) {
        if (k >= 1 && a > 0 && (u64)a % k == 0) {
            m = (u64)a / k;
            possible = is_k_perfect(m, k);
        }
    }
    std::optional<std::pair<u64, u64>> decompose(u64 n) const {
        if (!possible || n % m != 0) return std::nullopt;
        u64 p = n / m;
        if (!is_prime(p) || m % p == 0) return std::nullopt;
        return std::make_pair(p, m);
    }
};

}  // namespace

std::vector<KnaSolution> solutions(u64 k, i64 a, u64 x) {
    if (x < 1) throw std::invalid_argument("solutions: x must be >= 1");
    RegularTester reg(k, a);
    std::vector<KnaSolution> out;
    sieve_scan(x, [&](u64 n, u64 sigma, u64, u64) {
        if ((i128)sigma != (i128)k * n + a) return;
        KnaSolution sol;
        sol.n = n;
        sol.k = k;
        sol.a = a;
        sol.regular_decomposition = reg.decompose(n);
        sol.regular = sol.regular_decomposition.has_value();
        out.push_back(std::move(sol));
    });
    return out;
}

std::vector<SporadicPoint> sporadic_count_profile(u64 k, i64 a, const std::vector<u64>& x_list) {
    if (!std::is_sorted(x_list.begin(), x_list.end()))
        throw std::invalid_argument("sporadic_count_profile: x_list must ascend");
    std::vector<SporadicPoint> out;
    if (x_list.empty()) return out;
    RegularTester reg(k, a);
    std::size_t idx = 0;
    u64 running = 0;
    sieve_scan(x_list.back(), [&](u64 n, u64 sigma, u64, u64) {
        while (idx < x_list.size() && n > x_list[idx]) {
            out.push_back({x_list[idx], running, std::pow((double)x_list[idx], 0.6)});
            ++idx;
        }
        if ((i128)sigma == (i128)k * n + a && !reg.decompose(n).has_value()) ++running;
    });
    while (idx < x_list.size()) {
        out.push_back({x_list[idx], running, std::pow((double)x_list[idx], 0.6)});
        ++idx;
    }
    return out;
}

CongruenceCensus congruence_census(i64 a, u64 x) {
    if (x < 2) throw std::invalid_argument("congruence_census: x must be >= 2");
    CongruenceCensus c;
    c.a = a;
    c.x = x;
    sieve_scan(x, [&](u64 n, u64 sigma, u64, u64) {
        if (n < 2) return;  // mod 1 is trivially satisfied by every a
        u64 residue = (u64)(((a % (i64)n) + (i64)n) % (i64)n);
        if (sigma % n == residue) c.solutions.push_back(n);
    });
    c.count = c.solutions.size();
    c.normalized = (double)c.count / ((double)x / std::log((double)x));
    return c;
}

std::vector<CongruenceSweepRow> congruence_uniformity_sweep(const std::vector<i64>& a_list, u64 x) {
    if (x < 2) throw std::invalid_argument("congruence_uniformity_sweep: x must be >= 2");
    // one scan serves every a
    std::vector<u64> counts(a_list.size(), 0);
    sieve_scan(x, [&](u64 n, u64 sigma, u64, u64) {
        if (n < 2) return;
        u64 r = sigma % n;
        for (std::size_t i = 0; i < a_list.size(); ++i) {
            u64 residue = (u64)(((a_list[i] % (i64)n) + (i64)n) % (i64)n);
            if (r == residue) ++counts[i];
        }
    });
    std::vector<CongruenceSweepRow> rows;
    double norm = (double)x / std::log((double)x);
    for (std::size_t i = 0; i < a_list.size(); ++i)
        rows.push_back({a_list[i], counts[i], (double)counts[i] / norm});
    return rows;
}

}  // namespace aliquot
