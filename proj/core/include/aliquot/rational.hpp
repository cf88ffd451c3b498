#ifndef ALIQUOT_RATIONAL_HPP
#define ALIQUOT_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aliquot {

// Exact rational with 64-bit components; comparisons cross-multiply in
// 128 bits so no rounding ever happens.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) num = -num, den = -den;
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) num /= g, den /= g;
    }

    double to_double() const { return (double)num / (double)den; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den == (__int128)b.num * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        // reduce crosswise first so intermediates stay in range
        std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den, b.den);
        return Rational(a.num * (b.den / g) + b.num * (a.den / g), (a.den / g) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    Rational inverse() const {
        if (num == 0) throw std::domain_error("inverse of zero");
        return Rational(den, num);
    }
};

// Parses "p/q" or a plain integer.
inline Rational parse_rational(std::string_view sv) {
    std::string s(sv);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

// Best rational approximation with denominator <= max_den (continued
// fractions). Used where an analytic quantity must enter exact
// comparisons.
inline Rational approx_rational(double value, std::int64_t max_den) {
    bool neg = value < 0;
    double v = neg ? -value : value;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        std::int64_t a = (std::int64_t)fl;
        if ((double)q1 * a + q0 > (double)max_den) {
            // take the largest admissible semiconvergent
            std::int64_t amax = (max_den - q0) / (q1 == 0 ? 1 : q1);
            if (q1 != 0 && amax * 2 >= a && amax >= 1) {
                std::int64_t p2 = p1 * amax + p0, q2 = q1 * amax + q0;
                p0 = p1, q0 = q1, p1 = p2, q1 = q2;
            }
            break;
        }
        std::int64_t p2 = p1 * a + p0, q2 = q1 * a + q0;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    return Rational(neg ? -p1 : p1, q1);
}

}  // namespace aliquot

#endif
