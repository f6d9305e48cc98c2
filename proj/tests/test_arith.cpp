#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rnagell/arith.hpp"

using namespace rnagell;

namespace {
std::mt19937_64 rng(0x5eed);

Int random_int(uint64_t lo, uint64_t hi) {
    std::uniform_int_distribution<uint64_t> d(lo, hi);
    return Int(static_cast<unsigned long>(d(rng)));
}
}  // namespace

TEST_CASE("factorize on pinned values") {
    CHECK(factorize(1).factors.empty());

    auto f192 = factorize(192);
    REQUIRE(f192.factors.size() == 2);
    CHECK(f192.factors[0] == std::pair<Int, unsigned>{2, 6});
    CHECK(f192.factors[1] == std::pair<Int, unsigned>{3, 1});

    auto f1327 = factorize(1327);
    REQUIRE(f1327.factors.size() == 1);
    CHECK(f1327.factors[0] == std::pair<Int, unsigned>{1327, 1});
}

TEST_CASE("factorize reconstructs random inputs") {
    for (int trial = 0; trial < 300; ++trial) {
        Int m = random_int(1, 1'000'000'000);
        auto f = factorize(m);
        CHECK(f.reconstructs());
        for (size_t i = 0; i + 1 < f.factors.size(); ++i)
            CHECK(f.factors[i].first < f.factors[i + 1].first);
        for (const auto& [p, e] : f.factors) {
            CHECK(is_prime(p));
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("factorize budget") {
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    // product of two primes above the trial limit
    Int hard = Int(1'000'003) * Int(1'000'033);
    CHECK_THROWS_AS(factorize(hard), BudgetExceeded);
    // a prime cofactor above the limit is fine
    auto f = factorize(Int(1'000'003) * 4);
    CHECK(f.reconstructs());
}

TEST_CASE("Factorization::pow scales exponents") {
    auto f = factorize(36).pow(9);
    Int expect;
    mpz_pow_ui(expect.get_mpz_t(), Int(36).get_mpz_t(), 9);
    CHECK(f.value == expect);
    CHECK(f.reconstructs());
}

TEST_CASE("radical") {
    CHECK(radical(1) == 1);
    CHECK(radical(192) == 6);
    CHECK(radical(383) == 383);
    for (int trial = 0; trial < 100; ++trial) {
        Int m = random_int(1, 1'000'000);
        CHECK(radical(m * m) == radical(m));
    }
}

TEST_CASE("ord_p") {
    CHECK(ord_p(64, 2) == 6);
    CHECK(ord_p(372, 3) == 1);
    CHECK(ord_p(743, 2) == 0);
    CHECK(ord_p(-24, 2) == 3);
    CHECK_THROWS_AS(ord_p(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ord_p(10, 4), std::invalid_argument);
}

TEST_CASE("power_free_split pinned") {
    auto s1 = power_free_split(64, 7);
    CHECK(s1.f == 64);
    CHECK(s1.g == 1);

    auto s2 = power_free_split(Int(1) << 14, 7);
    CHECK(s2.f == 1);
    CHECK(s2.g == 4);

    Int m;
    mpz_pow_ui(m.get_mpz_t(), Int(192).get_mpz_t(), 7);
    auto s3 = power_free_split(m, 7);
    CHECK(s3.f == 1);
    CHECK(s3.g == 192);

    CHECK_THROWS_AS(power_free_split(10, 1), std::invalid_argument);
}

TEST_CASE("power_free_split properties and the valuation identity") {
    for (int trial = 0; trial < 300; ++trial) {
        Int m = random_int(1, 1'000'000);
        unsigned n = 2 + static_cast<unsigned>(rng() % 10);
        auto s = power_free_split(m, n);
        Int gn;
        mpz_pow_ui(gn.get_mpz_t(), s.g.get_mpz_t(), n);
        CHECK(s.f * gn == m);
        for (const auto& [p, e] : factorize(s.f).factors) CHECK(e < n);
        if (mpz_even_p(m.get_mpz_t())) {
            unsigned of = mpz_even_p(s.f.get_mpz_t()) ? ord_p(s.f, 2) : 0;
            unsigned og = mpz_even_p(s.g.get_mpz_t()) ? ord_p(s.g, 2) : 0;
            CHECK(ord_p(m, 2) == of + n * og);
            CHECK(of < n);
        }
    }
}

TEST_CASE("is_odd_prime_power") {
    auto r9 = is_odd_prime_power(9);
    REQUIRE(r9.has_value());
    CHECK(r9->first == 3);
    CHECK(r9->second == 2);

    auto r631 = is_odd_prime_power(631);
    REQUIRE(r631.has_value());
    CHECK(r631->first == 631);
    CHECK(r631->second == 1);

    CHECK_FALSE(is_odd_prime_power(63).has_value());
    CHECK_FALSE(is_odd_prime_power(1).has_value());
    CHECK_FALSE(is_odd_prime_power(8).has_value());

    auto r343 = is_odd_prime_power(343);
    REQUIRE(r343.has_value());
    CHECK(r343->first == 7);
    CHECK(r343->second == 3);
}

TEST_CASE("integer_sqrt") {
    CHECK(integer_sqrt(0) == std::pair<Int, bool>{0, true});
    CHECK(integer_sqrt(6399) == std::pair<Int, bool>{79, false});
    CHECK(integer_sqrt(2036329) == std::pair<Int, bool>{1427, true});
    CHECK_THROWS_AS(integer_sqrt(-1), std::invalid_argument);
    for (int trial = 0; trial < 300; ++trial) {
        Int m = random_int(0, 1'000'000'000);
        auto [s, exact] = integer_sqrt(m);
        CHECK(s * s <= m);
        CHECK(m < (s + 1) * (s + 1));
        CHECK(exact == (s * s == m));
    }
}

TEST_CASE("sign_quad is the exact sign of a + b*sqrt(D)") {
    CHECK(sign_quad(0, 0, 2) == 0);
    CHECK(sign_quad(3, -2, 2) > 0);   // 3 > 2*sqrt(2)
    CHECK(sign_quad(2, -2, 2) < 0);   // 2 < 2*sqrt(2)
    CHECK(sign_quad(-8, 3, 8) > 0);   // 3*sqrt(8) > 8
    CHECK(sign_quad(-9, 3, 8) < 0);   // 3*sqrt(8) < 9
    CHECK(sign_quad(1, 1, 79) > 0);
    CHECK(sign_quad(-1, -1, 79) < 0);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<unsigned>{1});
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(6) == std::vector<unsigned>{1, 2, 3, 6});
}

TEST_CASE("is_prime at the boundaries") {
    CHECK(is_prime(2));
    CHECK(is_prime(999983));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(999966000289));     // 999983^2
    CHECK(is_prime(Int("1000003")));
    CHECK(is_prime(Int("18446744073709551557")));  // largest 64-bit prime
}
