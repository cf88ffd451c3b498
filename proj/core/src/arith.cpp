#include "aliquot/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace aliquot {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    // this base set is deterministic for all n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's variant of Pollard rho. n odd composite, no factor < 2^16.
u64 brent_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (u64)(((u128)v * v + c) % n); };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = brent_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u64 m = n;
    auto push = [&](u64 p) {
        std::uint32_t e = 0;
        while (m % p == 0) m /= p, ++e;
        if (e) f.factors.push_back({p, e});
    };
    push(2);
    push(3);
    push(5);
    for (u64 p = 7; p < 65536 && p * p <= m; p += 30) {
        // 7,11,13,17,19,23,29,31 wheel mod 30
        for (u64 off : {0ull, 4ull, 6ull, 10ull, 12ull, 16ull, 22ull, 24ull}) push(p + off);
    }
    if (m > 1) {
        // remaining cofactor has no prime factor < 2^16
        std::vector<u64> primes;
        factor_rec(m, primes);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            f.factors.push_back({primes[i], (std::uint32_t)(j - i)});
            i = j;
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

u64 Factorization::product() const {
    u128 r = 1;
    for (const auto& [p, e] : factors)
        for (std::uint32_t i = 0; i < e; ++i) r *= p;
    return (u64)r;
}

u64 sigma_of(const Factorization& f) {
    u128 sigma = 1;
    for (const auto& [p, e] : f.factors) {
        u128 term = 1, pw = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            pw *= p;
            term += pw;
        }
        sigma *= term;
        if (sigma > ~(u64)0) throw std::overflow_error("sigma exceeds 64 bits");
    }
    return (u64)sigma;
}

ArithProfile profile(const Factorization& f) {
    ArithProfile a;
    a.n = f.n;
    a.sigma = sigma_of(f);
    a.s = a.sigma - a.n;
    a.omega = (std::uint32_t)f.factors.size();
    u64 tau = 1, rad = 1;
    u128 sqfull = 1;
    for (const auto& [p, e] : f.factors) {
        tau *= e + 1;
        rad *= p;
        if (e >= 2)
            for (std::uint32_t i = 0; i < e; ++i) sqfull *= p;
    }
    a.tau = (std::uint32_t)tau;
    a.rad = rad;
    a.squarefull_part = (u64)sqfull;
    if (!f.factors.empty()) {
        a.smallest_prime = f.factors.front().prime;
        a.largest_prime = f.factors.back().prime;
    }
    return a;
}

ArithProfile profile(u64 n) { return profile(factorize(n)); }

bool check_coprime_split_identity(u64 d, u64 e) {
    if (std::gcd(d, e) != 1) throw std::invalid_argument("d and e must be coprime");
    if ((u128)d * e >= ((u128)1 << 63)) throw std::overflow_error("d*e must be < 2^63");
    ArithProfile pd = profile(d), pe = profile(e);
    u128 lhs = profile(d * e).s;
    u128 rhs = (u128)pd.sigma * pe.s + (u128)pd.s * e;
    return lhs == rhs;
}

namespace {

void require_split_primes(u64 n0, u64 p, u64 q) {
    if (p == q) throw std::invalid_argument("p and q must be distinct");
    if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("p and q must be prime");
    if (n0 % p == 0 || n0 % q == 0) throw std::invalid_argument("p, q must not divide n0");
    if ((u128)n0 * p * q >= ((u128)1 << 63)) throw std::overflow_error("n0*p*q must be < 2^63");
}

}  // namespace

bool check_analogue_identity(u64 n0, u64 p, u64 q) {
    if (n0 < 2) throw std::invalid_argument("n0 must be >= 2");
    require_split_primes(n0, p, q);
    ArithProfile p0 = profile(n0);
    i128 s0 = p0.s, sig0 = p0.sigma;
    i128 s_npq = profile((u64)((u128)n0 * p * q)).s;
    i128 lhs = s0 * s_npq;
    i128 rhs = (s0 * p + sig0) * (s0 * q + sig0) + s0 * sig0 - sig0 * sig0;
    return lhs == rhs;
}

bool check_analogue2_identity(u64 n0, u64 p, u64 q, u64 k) {
    if (n0 < 1 || k < 1) throw std::invalid_argument("n0, k must be >= 1");
    require_split_primes(n0, p, q);
    ArithProfile p0 = profile(n0);
    i128 sig0 = p0.sigma;
    i128 T = sig0 - (i128)k * n0;
    u64 n = (u64)((u128)n0 * p * q);
    i128 sig_n = profile(n).sigma;
    i128 lhs = T * (sig_n - (i128)k * n);
    i128 rhs = (T * p + sig0) * (T * q + sig0) + T * sig0 - sig0 * sig0;
    return lhs == rhs;
}

u64 s_of_semiprime_expansion(u64 n0, u64 p, u64 q) {
    require_split_primes(n0, p, q);
    ArithProfile p0 = profile(n0);
    u128 v = (u128)p0.s * p * q + (u128)p0.sigma * (p + q + 1);
    if (v > ~(u64)0) throw std::overflow_error("s(n0 p q) exceeds 64 bits");
    return (u64)v;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t count = divs.size();
        u128 pw = 1;
        for (std::uint32_t i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back((u64)(divs[j] * pw));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace aliquot
