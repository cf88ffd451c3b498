#include "aliquot/construct.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "aliquot/kna.hpp"
#include "aliquot/sieve.hpp"

namespace aliquot {

std::vector<CollisionWitness> collision_search(i64 b, i64 a, u64 prime_bound,
                                               const std::function<bool(u64)>& prime_filter) {
    if (b == 0) throw std::invalid_argument("collision_search: b must be nonzero");
    if (prime_bound < 5) throw std::invalid_argument("collision_search: prime_bound must be >= 5");
    std::vector<u64> primes;
    for (u64 p : primes_up_to(prime_bound))
        if (!prime_filter || prime_filter(p)) primes.push_back(p);

    std::vector<i64> linear(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        i128 v = (i128)b * (i64)primes[i] + a;
        if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
            throw std::overflow_error("collision_search: b*p + a exceeds 64 bits");
        linear[i] = (i64)v;
    }

    std::unordered_map<i64, std::vector<std::pair<u64, u64>>> buckets;
    buckets.reserve(primes.size() * primes.size() / 2 + 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            i128 v = (i128)linear[i] * linear[j];
            if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
                throw std::overflow_error("collision_search: product exceeds 64 bits");
            buckets[(i64)v].emplace_back(primes[i], primes[j]);
        }
    }

    std::vector<CollisionWitness> out;
    for (auto& [k, pairs] : buckets) {
        if (pairs.size() < 2) continue;
        CollisionWitness w;
        w.b = b;
        w.a = a;
        w.k_value = k;
        std::sort(pairs.begin(), pairs.end());
        w.pairs = std::move(pairs);
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const CollisionWitness& x, const CollisionWitness& y) {
        if (x.pairs.size() != y.pairs.size()) return x.pairs.size() > y.pairs.size();
        return x.k_value < y.k_value;
    });
    return out;
}

namespace {

void check_ratio_args(const Rational& alpha, const Rational& epsilon) {
    if (alpha <= Rational(0)) throw std::invalid_argument("alpha must be positive");
    if (epsilon <= Rational(0) || epsilon >= Rational(2))
        throw std::invalid_argument("epsilon must lie in (0,2)");
}

bool ratio_in_window(u64 s, u64 n, const Rational& alpha, const Rational& epsilon) {
    // s/n in (alpha^-1 (1 - eps/2), alpha^-1 (1 + eps/2))
    Rational ratio((i64)s, (i64)n);
    Rational inv = alpha.inverse();
    Rational half_eps = epsilon * Rational(1, 2);
    return ratio > inv * (Rational(1) - half_eps) && ratio < inv * (Rational(1) + half_eps);
}

}  // namespace

u64 find_ratio_seed(const Rational& alpha, const Rational& epsilon, u64 search_bound) {
    check_ratio_args(alpha, epsilon);
    for (u64 n = 2; n <= search_bound; ++n) {
        if (ratio_in_window(profile(n).s, n, alpha, epsilon)) return n;
    }
    throw not_found_error("find_ratio_seed: no seed up to bound");
}

ClusterWitness cluster_witness(const Rational& alpha, const Rational& epsilon_in, u64 n0,
                               u64 prime_bound, bool relax_thresholds) {
    if (n0 < 2) throw std::invalid_argument("cluster_witness: n0 must be >= 2");
    if (alpha <= Rational(0)) throw std::invalid_argument("alpha must be positive");
    if (epsilon_in <= Rational(0)) throw std::invalid_argument("epsilon must be positive");

    ClusterWitness w;
    w.n0 = n0;
    w.alpha = alpha;
    w.epsilon = epsilon_in;
    if (epsilon_in >= Rational(1)) {
        w.epsilon = Rational(99, 100);
        w.waived_constraints.push_back("epsilon_clamped_to_99/100");
    }
    const Rational eps = w.epsilon;

    ArithProfile p0 = profile(n0);
    if (p0.s == 0) throw std::invalid_argument("cluster_witness: n0 must be composite (s(n0) > 0)");
    if (!ratio_in_window(p0.s, n0, alpha, eps))
        throw std::invalid_argument("cluster_witness: n0 violates the ratio window");

    const i64 s0 = (i64)p0.s, sig0 = (i64)p0.sigma;
    // proof threshold: p, q > max{n0, 12 sigma(n0) / (eps s(n0))}
    Rational threshold = Rational(12 * sig0) * eps.inverse() * Rational(1, s0);
    if (threshold < Rational((i64)n0)) threshold = Rational((i64)n0);

    auto admissible = [&](u64 p) {
        if (n0 % p == 0) return false;
        if (!relax_thresholds && !(Rational((i64)p) > threshold)) return false;
        return true;
    };
    auto found = collision_search(s0, sig0, prime_bound, admissible);
    if (found.empty()) throw not_found_error("cluster_witness: no collision up to prime_bound");

    const CollisionWitness& top = found.front();
    w.k_value = top.k_value;
    w.pairs = top.pairs;

    i128 numer = (i128)top.k_value + (i128)s0 * sig0 - (i128)sig0 * sig0;
    if (numer <= 0 || numer % s0 != 0)
        throw std::logic_error("cluster_witness: m fails integrality (identity violated)");
    w.m = (u64)(numer / s0);

    Rational lower = alpha * (Rational(1) - eps) * Rational((i64)w.m);
    Rational upper = alpha * (Rational(1) + eps) * Rational((i64)w.m);
    w.window_lower = (u64)std::max<i64>(0, lower.num / lower.den);
    w.window_upper = (u64)(upper.num / upper.den + 1);

    for (const auto& [p, q] : w.pairs) {
        if (relax_thresholds && !(Rational((i64)p) > threshold))
            w.waived_constraints.push_back("prime_threshold:p=" + std::to_string(p));
        if (relax_thresholds && !(Rational((i64)q) > threshold))
            w.waived_constraints.push_back("prime_threshold:q=" + std::to_string(q));
        u64 n = n0 * p * q;
        // two independent routes: direct profile and the expansion formula
        if (profile(n).s != w.m || s_of_semiprime_expansion(n0, p, q) != w.m)
            throw std::logic_error("cluster_witness: preimage fails s(n) = m");
        if (!check_analogue_identity(n0, p, q))
            throw std::logic_error("cluster_witness: product identity fails");
        Rational rn((i64)n);
        if (!(rn > lower && rn < upper))
            throw not_found_error("cluster_witness: preimage outside the window");
        w.preimages.push_back(n);
    }
    std::sort(w.preimages.begin(), w.preimages.end());
    return w;
}

KnaWitness kna_witness(u64 k, u64 prime_bound) {
    if (k < 1) throw std::invalid_argument("kna_witness: k must be >= 1");
    KnaWitness w;
    w.k = k;
    // least seed with abundancy above 2k; 2k <= 4 is reachable at desk scale
    const u64 seed_limit = 1u << 20;
    for (u64 n = 1; n <= seed_limit; ++n) {
        ArithProfile p = profile(n);
        if ((u128)p.sigma > (u128)2 * k * n) {
            w.n0 = n;
            break;
        }
    }
    if (w.n0 == 0) throw not_found_error("kna_witness: no seed with sigma/n > 2k in range");

    ArithProfile p0 = profile(w.n0);
    const i64 sig0 = (i64)p0.sigma;
    w.T = sig0 - (i64)(k * w.n0);

    auto coprime = [&](u64 p) { return w.n0 % p == 0 ? false : true; };
    auto found = collision_search(w.T, sig0, prime_bound, coprime);
    if (found.empty()) throw not_found_error("kna_witness: no collision up to prime_bound");

    const CollisionWitness& top = found.front();
    w.k_value = top.k_value;
    w.pairs = top.pairs;

    i128 numer = (i128)top.k_value + (i128)w.T * sig0 - (i128)sig0 * sig0;
    if (numer % w.T != 0)
        throw std::logic_error("kna_witness: a fails integrality (identity violated)");
    w.a = (i64)(numer / w.T);

    for (const auto& [p, q] : w.pairs) {
        u64 n = w.n0 * p * q;
        Factorization f = factorize(n);
        ArithProfile pr = profile(f);
        if ((i128)pr.sigma != (i128)k * n + w.a)
            throw std::logic_error("kna_witness: solution fails sigma(n) = kn + a");
        if (!((i128)n <= w.a)) throw std::logic_error("kna_witness: n exceeds a");
        if (!check_analogue2_identity(w.n0, p, q, k))
            throw std::logic_error("kna_witness: product identity fails");
        // abundancy route: sigma(n)/n > 2k rules out n = m p / m p q with m k-perfect
        if (!((u128)pr.sigma > (u128)2 * k * n))
            throw std::logic_error("kna_witness: abundancy exclusion fails");
        // and the literal divisor-based exclusion
        for (u64 d : divisors(f)) {
            u64 cof = n / d;
            Factorization cf = factorize(cof);
            u64 big_omega = 0;
            for (const auto& [cp, ce] : cf.factors) big_omega += ce;
            if ((big_omega == 1 || big_omega == 2) && is_k_perfect(d, k))
                throw std::logic_error("kna_witness: k-perfect-form exclusion fails");
        }
        w.solutions.push_back(n);
    }
    std::sort(w.solutions.begin(), w.solutions.end());
    return w;
}

}  // namespace aliquot
