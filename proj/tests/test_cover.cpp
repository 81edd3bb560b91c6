#include <doctest.h>

#include "rssep/cover.hpp"

using namespace rssep;

TEST_CASE("exact 2*q^{3/4} bounds") {
    CHECK(floor_two_q34(101) == 63);
    CHECK(ceil_two_q34(101) == 64);
    CHECK(floor_two_q34(81) == 54);   // integral: 2 * 27
    CHECK(ceil_two_q34(81) == 54);
    CHECK(floor_two_q34(16) == 16);
    CHECK(floor_two_q34(2) == 3);     // 2 * 2^{3/4} = 3.36...
}

TEST_CASE("prime power detection") {
    std::uint32_t p = 0, s = 0;
    CHECK(is_prime_power(8, &p, &s));
    CHECK(p == 2);
    CHECK(s == 3);
    CHECK(is_prime_power(97, &p, &s));
    CHECK(s == 1);
    CHECK(!is_prime_power(6, nullptr, nullptr));
    CHECK(!is_prime_power(12, nullptr, nullptr));
    CHECK(!is_prime_power(1, nullptr, nullptr));
}

TEST_CASE("minimal cover bounds at small sizes") {
    // q = 3, alpha = 2: powers 1, 2 give differences {0, 1, 2} already at B = 1
    const CoverRow r3 = min_cover_bound(Field::make(3, 1));
    REQUIRE(r3.min_bound.has_value());
    CHECK(*r3.min_bound == 1);

    const CoverRow r101 = min_cover_bound(Field::make(101, 1));
    REQUIRE(r101.min_bound.has_value());
    CHECK(*r101.min_bound <= 63);
    CHECK(r101.within_stated);

    // GF(4): differences of {1, a, a^2} close the field at B = 2
    const CoverRow r4 = min_cover_bound(Field::make(2, 2));
    REQUIRE(r4.min_bound.has_value());
    CHECK(*r4.min_bound == 2);
}

TEST_CASE("q = 2 has no difference cover") {
    // the only power of the generator is 1, so differences never leave {0}
    const CoverRow r2 = min_cover_bound(Field::make(2, 1));
    CHECK(!r2.min_bound.has_value());
}

TEST_CASE("sweep is schedule-independent and within bounds") {
    const auto serial = cover_sweep(300, /*primes_only=*/false, ScanMode::Serial);
    const auto parallel = cover_sweep(300, /*primes_only=*/false, ScanMode::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].q == parallel[i].q);
        CHECK(serial[i].min_bound == parallel[i].min_bound);
        if (serial[i].q >= 29) {
            REQUIRE(serial[i].min_bound.has_value());
            CHECK(serial[i].within_stated);
        }
    }
    const auto primes = cover_sweep(300, /*primes_only=*/true);
    for (const auto& row : primes) CHECK(row.s == 1);
}
