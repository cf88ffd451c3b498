#include "aliquot/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "aliquot/sieve.hpp"

namespace aliquot {

using boost::multiprecision::cpp_int;

SetSpec SetSpec::primes() {
    SetSpec s;
    s.kind_ = Kind::Primes;
    return s;
}

SetSpec SetSpec::palindromes(unsigned base) {
    if (base < 2 || base > 36) throw std::invalid_argument("palindrome base must be in 2..36");
    SetSpec s;
    s.kind_ = Kind::Palindromes;
    s.param_ = base;
    return s;
}

SetSpec SetSpec::squares() {
    SetSpec s;
    s.kind_ = Kind::Squares;
    return s;
}

SetSpec SetSpec::kth_powers(unsigned k) {
    if (k < 1) throw std::invalid_argument("kth_powers: k must be >= 1");
    SetSpec s;
    s.kind_ = Kind::KthPowers;
    s.param_ = k;
    return s;
}

SetSpec SetSpec::explicit_values(std::vector<u64> values) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1])
            throw std::invalid_argument("explicit set must be strictly ascending");
    SetSpec s;
    s.kind_ = Kind::Explicit;
    s.values_ = std::move(values);
    return s;
}

SetSpec SetSpec::explicit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open set file: " + path);
    std::vector<u64> values;
    u64 v;
    while (in >> v) values.push_back(v);
    return explicit_values(std::move(values));
}

namespace {

u64 iroot(u64 v, unsigned k) {
    if (k == 1) return v;
    u64 r = (u64)std::llround(std::pow((double)v, 1.0 / k));
    auto pw = [&](u64 b) {
        u128 x = 1;
        for (unsigned i = 0; i < k; ++i) {
            x *= b;
            if (x > ~(u64)0) return (u128)~(u64)0 + 1;
        }
        return x;
    };
    while (r > 0 && pw(r) > v) --r;
    while (pw(r + 1) <= v) ++r;
    return r;
}

bool is_palindrome(u64 v, unsigned base) {
    unsigned char digits[64];
    int len = 0;
    while (v) {
        digits[len++] = (unsigned char)(v % base);
        v /= base;
    }
    for (int i = 0, j = len - 1; i < j; ++i, --j)
        if (digits[i] != digits[j]) return false;
    return true;
}

}  // namespace

bool SetSpec::contains(u64 v) const {
    if (v == 0) return false;  // sets of positive integers
    switch (kind_) {
        case Kind::Primes:
            return is_prime(v);
        case Kind::Palindromes:
            return is_palindrome(v, param_);
        case Kind::Squares: {
            u64 r = iroot(v, 2);
            return r * r == v;
        }
        case Kind::KthPowers: {
            if (param_ == 1) return true;
            u64 r = iroot(v, param_);
            u128 x = 1;
            for (unsigned i = 0; i < param_; ++i) x *= r;
            return x == v;
        }
        case Kind::Explicit: {
            if (values_.empty() || v > values_.back())
                throw incomplete_set_error("explicit set does not cover " + std::to_string(v));
            return std::binary_search(values_.begin(), values_.end(), v);
        }
    }
    return false;
}

std::string SetSpec::describe() const {
    switch (kind_) {
        case Kind::Primes: return "primes";
        case Kind::Palindromes: return "palindromes:" + std::to_string(param_);
        case Kind::Squares: return "squares";
        case Kind::KthPowers: return "powers:" + std::to_string(param_);
        case Kind::Explicit: return "explicit(" + std::to_string(values_.size()) + ")";
    }
    return "?";
}

Rational epsilon_of(u64 x, std::optional<Rational> override_eps) {
    if (x < 16) throw std::domain_error("epsilon_of: x must be >= 16");
    double floor_val = 1.0 / std::log(std::log((double)x));
    Rational floor_rat = approx_rational(floor_val, 512);
    if (override_eps && *override_eps > floor_rat) return *override_eps;
    return floor_rat;
}

namespace {

// exact comparison d^(2v) vs x^e with e possibly negative
// returns -1/0/+1 for d^(2v) <=> x^e
int cmp_pow(u64 d, i64 two_v, u64 x, i64 e) {
    if (e < 0) {
        // x^e < 1 <= d^(2v) for d >= 1
        return 1;
    }
    cpp_int lhs = boost::multiprecision::pow(cpp_int(d), (unsigned)two_v);
    cpp_int rhs = boost::multiprecision::pow(cpp_int(x), (unsigned)e);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace

ExceptionalThresholds exceptional_thresholds(u64 x, const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
    ExceptionalThresholds t;
    t.x = x;
    t.epsilon = eps;

    t.prime_cut = (u64)std::floor(std::log((double)x));

    const i64 u = eps.num, v = eps.den;
    const i64 lo_exp = v - 20 * u;  // window is x^(lo_exp/2v) .. x^(hi_exp/2v)
    const i64 hi_exp = v + 20 * u;
    const i64 two_v = 2 * v;

    // smallest d with d^(2v) > x^(lo_exp)
    if (lo_exp <= 0) {
        t.divisor_lo = 1;
    } else {
        u64 guess = (u64)std::llround(std::pow((double)x, (double)lo_exp / (double)two_v));
        u64 d = guess > 4 ? guess - 4 : 1;
        while (cmp_pow(d, two_v, x, lo_exp) <= 0) ++d;
        while (d > 1 && cmp_pow(d - 1, two_v, x, lo_exp) > 0) --d;
        t.divisor_lo = d;
    }

    // largest d with d^(2v) < x^(hi_exp), capped at x (divisors of n <= x)
    if (hi_exp >= two_v) {
        t.divisor_hi = x;
    } else {
        u64 guess = (u64)std::llround(std::pow((double)x, (double)hi_exp / (double)two_v));
        u64 d = guess + 4;
        while (d > 1 && cmp_pow(d, two_v, x, hi_exp) >= 0) --d;
        while (cmp_pow(d + 1, two_v, x, hi_exp) < 0) ++d;
        t.divisor_hi = std::min(d, x);
    }

    // largest c with c^v <= x^(2u); flag_c is squarefull_part > that
    if (2 * u >= v) {
        t.squarefull_cut = x;  // x^{2eps} >= x bounds every squarefull part
    } else {
        u64 guess = (u64)std::llround(std::pow((double)x, 2.0 * (double)u / (double)v));
        u64 c = guess + 4;
        auto cmp = [&](u64 cc) {
            cpp_int lhs = boost::multiprecision::pow(cpp_int(cc), (unsigned)v);
            cpp_int rhs = boost::multiprecision::pow(cpp_int(x), (unsigned)(2 * u));
            return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
        };
        while (c > 1 && cmp(c) > 0) --c;
        while (cmp(c + 1) <= 0) ++c;
        t.squarefull_cut = c;
    }

    u64 r = (u64)std::llround(std::sqrt((double)x));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    t.sqrt_x = r;
    return t;
}

ExceptionalFlags classify_exceptional(const Factorization& f, const ExceptionalThresholds& t) {
    ExceptionalFlags flags;
    flags.n = f.n;
    flags.epsilon_used = t.epsilon;

    // (a) no prime factor in (1, ln x]; vacuously true for n = 1
    flags.flag_a = f.factors.empty() || f.factors.front().prime > t.prime_cut;

    // (b) some divisor inside the window
    if (t.divisor_lo <= t.divisor_hi) {
        for (u64 d : divisors(f)) {
            if (d >= t.divisor_lo && d <= t.divisor_hi) {
                flags.flag_b = true;
                break;
            }
        }
    }

    // (c) squarefull part exceeding x^{2eps}
    flags.flag_c = profile(f).squarefull_part > t.squarefull_cut;

    // (d) n <= sqrt(x)
    flags.flag_d = f.n <= t.sqrt_x;
    return flags;
}

ExceptionalFlags classify_exceptional(u64 n, u64 x, const Rational& eps) {
    if (n < 1 || n > x) throw std::invalid_argument("classify_exceptional: need 1 <= n <= x");
    return classify_exceptional(factorize(n), exceptional_thresholds(x, eps));
}

namespace {

// smallest-prime-factor table for fast per-n factorizations in scans
std::vector<std::uint32_t> spf_table(u64 x) {
    if (x > 200'000'000) throw std::invalid_argument("scan bound too large for spf table");
    std::vector<std::uint32_t> spf(x + 1, 0);
    for (u64 i = 2; i <= x; ++i) {
        if (spf[i] == 0)
            for (u64 j = i; j <= x; j += i)
                if (spf[j] == 0) spf[j] = (std::uint32_t)i;
    }
    return spf;
}

Factorization factorize_with_spf(u64 n, const std::vector<std::uint32_t>& spf) {
    Factorization f;
    f.n = n;
    while (n > 1) {
        u64 p = spf[n];
        std::uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        f.factors.push_back({p, e});
    }
    return f;
}

}  // namespace

std::vector<DensityPoint> exceptional_density(const std::vector<u64>& x_list,
                                              std::optional<Rational> override_eps) {
    if (!std::is_sorted(x_list.begin(), x_list.end()))
        throw std::invalid_argument("exceptional_density: x_list must ascend");
    std::vector<DensityPoint> out;
    if (x_list.empty()) return out;
    auto spf = spf_table(x_list.back());
    for (u64 x : x_list) {
        auto t = exceptional_thresholds(x, epsilon_of(x, override_eps));
        u64 count = 0;
        for (u64 n = 1; n <= x; ++n)
            if (classify_exceptional(factorize_with_spf(n, spf), t).any()) ++count;
        out.push_back({x, count, (double)count / (double)x});
    }
    return out;
}

PreimageCount preimage_count(const SetSpec& set, u64 x) {
    if (x < 1) throw std::invalid_argument("preimage_count: x must be >= 1");
    PreimageCount r;
    r.x = x;
    std::mt19937_64 rng(0x5eedful);  // fixed seed: deterministic sample
    u64 seen = 0;
    sieve_scan(x, [&](u64 n, u64, u64 s, u64) {
        if (!set.contains(s)) return;
        ++r.count;
        ++seen;
        if (r.sample.size() < 20) {
            r.sample.push_back(n);
        } else {
            u64 j = rng() % seen;
            if (j < 20) r.sample[(std::size_t)j] = n;
        }
    });
    r.density = (double)r.count / (double)x;
    return r;
}

}  // namespace aliquot
