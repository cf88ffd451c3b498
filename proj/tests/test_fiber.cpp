#include <doctest.h>

#include <map>

#include "aliquot/fiber.hpp"
#include "aliquot/sieve.hpp"
#include "oracle.hpp"

using namespace aliquot;

TEST_CASE("fiber_scan examples") {
    auto r0 = fiber_scan(0, 100);
    CHECK(r0.preimages == std::vector<u64>{1});
    CHECK(r0.complete_for_all_n);

    auto r6 = fiber_scan(6, 100);
    CHECK(r6.preimages == std::vector<u64>{6, 25});
    CHECK(r6.complete_for_all_n);  // 100 >= 36

    auto r9 = fiber_scan(9, 100);
    CHECK(r9.preimages == std::vector<u64>{15});
    CHECK(oracle::s(15) == 9);

    auto r1 = fiber_scan(1, 100);
    CHECK(r1.infinite);
    CHECK_FALSE(r1.complete_for_all_n);
    CHECK(r1.preimages.size() == 25);  // primes up to 100

    // x below m^2: not certifiably complete
    CHECK_FALSE(fiber_scan(50, 100).complete_for_all_n);
    CHECK(fiber_scan(50, 2500).complete_for_all_n);
}

TEST_CASE("fiber_scan equals naive filter for m <= 200, x = 10^4") {
    const u64 x = 10000;
    std::map<u64, std::vector<u64>> naive;
    for (u64 n = 1; n <= x; ++n) {
        u64 s = oracle::s(n);
        if (s <= 200) naive[s].push_back(n);
    }
    for (u64 m = 0; m <= 200; ++m) {
        auto r = fiber_scan(m, x);
        auto it = naive.find(m);
        CHECK(r.preimages == (it == naive.end() ? std::vector<u64>{} : it->second));
    }
}

TEST_CASE("fiber_semiprime examples") {
    CHECK(fiber_semiprime(9) == std::vector<u64>{15});
    CHECK(fiber_semiprime(4) == std::vector<u64>{9});  // p^2 branch, s(9) = 4
    CHECK(fiber_semiprime(5).empty());
    CHECK_THROWS_AS(fiber_semiprime(2), std::invalid_argument);
}

TEST_CASE("fiber_semiprime is contained in the full fiber") {
    // one scan to 10^6 = max m^2 serves every target m <= 10^3; every
    // semiprime preimage of m is below m^2, so nothing is cut off
    const u64 mmax = 1000;
    std::map<u64, std::vector<u64>> fibers;
    sieve_scan(mmax * mmax, [&](u64 n, u64, u64 s, u64) {
        if (s >= 3 && s <= mmax) fibers[s].push_back(n);
    });
    for (u64 m = 3; m <= mmax; ++m) {
        const auto& full = fibers[m];
        for (u64 n : fiber_semiprime(m)) {
            CHECK(n < m * m);
            CHECK(std::find(full.begin(), full.end(), n) != full.end());
        }
    }
}

TEST_CASE("untouchables") {
    CHECK(untouchables_up_to(10) == std::vector<u64>{2, 5});
    CHECK(untouchables_up_to(100) == std::vector<u64>{2, 5, 52, 88, 96});
    CHECK(untouchables_up_to(2) == std::vector<u64>{2});
}

TEST_CASE("untouchable certification: no composite preimage exists") {
    for (u64 m : untouchables_up_to(60)) {
        for (u64 n = 4; n <= m * m; ++n) {
            if (oracle::is_prime(n)) continue;
            CHECK(oracle::s(n) != m);
        }
    }
}

TEST_CASE("completeness bound soundness") {
    // for m <= 50, scanning ten times past m^2 finds nothing new
    for (u64 m = 2; m <= 50; ++m) {
        auto at_bound = fiber_scan(m, m * m);
        REQUIRE(at_bound.complete_for_all_n);
        auto beyond = fiber_scan(m, 10 * m * m);
        CHECK(at_bound.preimages == beyond.preimages);
    }
}

TEST_CASE("max multiplicity targets") {
    auto top30 = max_multiplicity_targets(30);
    REQUIRE(top30.size() == 1);
    CHECK(top30[0].first == 1);   // the primes' fiber dominates
    CHECK(top30[0].second == 10);

    auto top100 = max_multiplicity_targets(100, 2);
    // frozen by exhaustive scan: best m >= 2 at x = 100
    std::map<u64, u64> counts;
    for (u64 n = 1; n <= 100; ++n) {
        u64 s = oracle::s(n);
        if (s >= 2) ++counts[s];
    }
    u64 best = 0;
    for (auto& [m, c] : counts) best = std::max(best, c);
    for (auto& [m, c] : top100) {
        CHECK(c == best);
        CHECK(counts[m] == best);
    }
}
