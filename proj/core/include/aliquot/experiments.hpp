#ifndef ALIQUOT_EXPERIMENTS_HPP
#define ALIQUOT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aliquot/arith.hpp"
#include "aliquot/rational.hpp"

namespace aliquot {

struct incomplete_set_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Membership test for the target set A of a preimage-count run. All
// kinds are sets of positive integers; membership of 0 is always false.
class SetSpec {
  public:
    enum class Kind { Primes, Palindromes, Squares, KthPowers, Explicit };

    static SetSpec primes();
    static SetSpec palindromes(unsigned base);  // bases 2..36
    static SetSpec squares();
    static SetSpec kth_powers(unsigned k);  // k = 1 is all positive integers
    // One decimal integer per line, ascending, duplicates rejected. The
    // largest entry is taken as the coverage bound: membership queries
    // above it raise incomplete_set_error.
    static SetSpec explicit_file(const std::string& path);
    static SetSpec explicit_values(std::vector<u64> values);

    bool contains(u64 v) const;
    Kind kind() const { return kind_; }
    std::string describe() const;

  private:
    SetSpec() = default;
    Kind kind_ = Kind::Primes;
    unsigned param_ = 0;
    std::vector<u64> values_;
};

// Default epsilon(x) = 1/ln ln x as an exact rational approximation
// (denominator <= 512); a user override is max-ed with that floor.
// Requires x >= 16 so that ln ln x > 0.
Rational epsilon_of(u64 x, std::optional<Rational> override_eps = std::nullopt);

// Exceptional-class flags for one n at scale x:
//   a: n has no prime factor in (1, ln x]
//   b: n has a divisor in (x^{1/2-10eps}, x^{1/2+10eps})
//   c: squarefull part of n exceeds x^{2eps}
//   d: n <= sqrt(x)
struct ExceptionalFlags {
    u64 n = 0;
    bool flag_a = false, flag_b = false, flag_c = false, flag_d = false;
    Rational epsilon_used;
    bool any() const { return flag_a || flag_b || flag_c || flag_d; }
};

// Integer thresholds for the four conditions at a given (x, eps),
// derived once by exact bignum power comparisons so that every per-n
// test is a plain integer comparison.
struct ExceptionalThresholds {
    u64 x = 0;
    Rational epsilon;
    u64 prime_cut = 0;       // flag_a: smallest prime factor > prime_cut
    u64 divisor_lo = 0;      // flag_b: some divisor d with divisor_lo <= d <= divisor_hi
    u64 divisor_hi = 0;
    u64 squarefull_cut = 0;  // flag_c: squarefull part > squarefull_cut
    u64 sqrt_x = 0;          // flag_d: n <= sqrt_x
};
ExceptionalThresholds exceptional_thresholds(u64 x, const Rational& eps);

ExceptionalFlags classify_exceptional(u64 n, u64 x, const Rational& eps);
ExceptionalFlags classify_exceptional(const Factorization& f, const ExceptionalThresholds& t);

struct DensityPoint {
    u64 x = 0;
    u64 count = 0;
    double density = 0.0;
};

// Exact counts of the exceptional set over full scans, default eps(x).
std::vector<DensityPoint> exceptional_density(const std::vector<u64>& x_list,
                                              std::optional<Rational> override_eps = std::nullopt);

// Exact count of n <= x with s(n) in the set, plus a deterministic
// reservoir sample of up to 20 witnesses.
struct PreimageCount {
    u64 x = 0;
    u64 count = 0;
    double density = 0.0;
    std::vector<u64> sample;
};
PreimageCount preimage_count(const SetSpec& set, u64 x);

}  // namespace aliquot

#endif
