#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rnagell/frey.hpp"

using namespace rnagell;

namespace {

Int pow_int(const Int& b, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

}  // namespace

TEST_CASE("build_frey_params") {
    auto p = build_frey_params(192, 7, 1, 7);
    CHECK(p.A == -1);
    CHECK(p.a == 383);
    CHECK(p.B == 1);
    CHECK(p.b == 192);
    CHECK(p.C == 1);
    CHECK(p.c == 1);  // x = 1 (mod 4) keeps the sign

    auto p3 = build_frey_params(192, 7, 7, 7);
    CHECK(p3.c == -7);  // x = 3 (mod 4) flips the sign

    auto p36 = build_frey_params(36, 9, 1, 7);
    CHECK(p36.B * pow_int(p36.b, 7) == pow_int(36, 9));
    for (const auto& [prime, e] : factorize(p36.B).factors) CHECK(e < 7);

    CHECK_THROWS_AS(build_frey_params(192, 7, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_frey_params(192, 7, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_frey_params(192, 8, 1, 7), std::invalid_argument);  // even z
    CHECK_THROWS_AS(build_frey_params(192, 7, 2, 7), std::invalid_argument);  // even x
}

TEST_CASE("classify_case tables") {
    auto p192 = build_frey_params(192, 7, 1, 7);
    auto t = classify_case(p192);
    CHECK(t.tag == SignatureCase::v);
    CHECK(t.alpha == 0);   // ord_2(B b^n) = 42 >= 7
    CHECK(t.delta == -12);

    auto p4 = build_frey_params(4, 9, 1, 7);
    auto t4 = classify_case(p4);
    CHECK(t4.tag == SignatureCase::v);

    // synthetic all-odd parameters, b = -BC (mod 4)
    FreyParams s1{7, 1, 1, 1, 3, 1, 1, 0, 0, 1};
    auto c1 = classify_case(s1);
    CHECK(c1.tag == SignatureCase::i);
    CHECK(c1.alpha == 5);
    CHECK(c1.delta == 6);

    // ord_2(B) = 1
    FreyParams s2{7, 1, 1, 2, 1, 1, 1, 0, 0, 1};
    auto c2 = classify_case(s2);
    CHECK(c2.tag == SignatureCase::ii);
    CHECK(c2.alpha == 6);

    // ord_2(B) = 2, C = -bB/4 (mod 4), b = -BC/4 (mod 4)
    FreyParams s3{7, 1, 1, 4, 1, 3, 1, 0, 0, 1};
    auto c3 = classify_case(s3);
    CHECK(c3.tag == SignatureCase::iii);
    CHECK(c3.alpha == 1);
    CHECK(c3.delta == 0);

    // ord_2(B) = 3, c = C (mod 4)
    FreyParams s4{7, 1, 1, 8, 1, 1, 1, 0, 0, 1};
    auto c4 = classify_case(s4);
    CHECK(c4.tag == SignatureCase::iv);
    CHECK(c4.alpha == 4);

    // ord_2(B) = 6 exactly: alpha = -1
    FreyParams s5{7, 1, 1, 64, 1, 1, 1, 0, 0, 1};
    auto c5 = classify_case(s5);
    CHECK(c5.tag == SignatureCase::v);
    CHECK(c5.alpha == -1);

    // nothing applies
    FreyParams bad{7, 1, 1, 1, 1, 1, 3, 0, 0, 3};
    CHECK_THROWS_AS(classify_case(bad), std::domain_error);
}

TEST_CASE("case v holds for every 4 | k with small 2-adic valuation") {
    for (unsigned k : {4u, 36u, 40u, 192u, 640u}) {
        for (unsigned z : {7u, 9u, 21u}) {
            auto p = build_frey_params(k, z, 1, 7);
            CHECK(classify_case(p).tag == SignatureCase::v);
        }
    }
}

TEST_CASE("lemma35_check") {
    CHECK(lemma35_check(192, 21, 7));
    CHECK(lemma35_check(4, 21, 7));
    CHECK(lemma35_check(4, 7, 7));
    CHECK_THROWS_AS(lemma35_check(6, 21, 7), std::invalid_argument);  // 4 must divide k
}

TEST_CASE("discriminant formula") {
    auto p = build_frey_params(192, 7, 1, 7);
    auto tag = classify_case(p);
    Rat d = discriminant(p, tag);
    Rat lhs = d * pow_int(2, 12);
    Rat rhs(-pow_int(383 * Int(192) * 192, 7));
    CHECK(lhs == rhs);

    FreyParams unit_v{7, -1, 1, 1, 1, 1, 1, 0, 0, 1};
    Rat dv = discriminant(unit_v, CaseTag{SignatureCase::v, 0, -12});
    CHECK(dv == Rat(-1, 4096));

    FreyParams unit_i{7, 1, 1, 1, 1, 1, 1, 0, 0, 1};
    Rat di = discriminant(unit_i, CaseTag{SignatureCase::i, 5, 6});
    CHECK(di == 64);
}

TEST_CASE("conductor values") {
    CHECK(conductor_rn(192) == 2298);
    CHECK(conductor_rn(640) == 12790);
    CHECK(conductor_rn(720) == 43170);
    CHECK(conductor_rn(724) == 523814);
    for (unsigned k : {36u, 172u, 316u, 652u})
        CHECK(conductor_rn(k) == radical(Int(k) * (2 * Int(k) - 1)));
}

TEST_CASE("embedded fixtures") {
    const auto& fx = default_fixtures();
    REQUIRE(fx.size() == 2);
    CHECK(fx[0].label == "2298h1");
    CHECK(fx[0].conductor == 2298);
    CHECK(fx[0].a == std::array<Int, 5>{1, 0, 0, 6, 0});
    CHECK(fx[1].label == "12790b1");
    CHECK(fx[1].a == std::array<Int, 5>{1, 0, 0, 20, 0});
    CHECK(fx[0].weierstrass_disc() != 0);
    CHECK(fx[1].weierstrass_disc() != 0);
}

TEST_CASE("fixture file parsing") {
    std::istringstream in(
        "# label conductor a1 a2 a3 a4 a6\n"
        "2298h1 2298 1 0 0 6 0\n"
        "\n"
        "37a1 37 0 0 1 -1 0\n");
    auto fx = load_fixtures(in);
    REQUIRE(fx.size() == 2);
    CHECK(fx[1].label == "37a1");
    CHECK(fx[1].conductor == 37);

    std::istringstream bad("x1 100 1 0 0\n");
    CHECK_THROWS_AS(load_fixtures(bad), std::invalid_argument);

    std::istringstream singular("s1 11 0 0 0 0 0\n");
    CHECK_THROWS_AS(load_fixtures(singular), std::invalid_argument);

    CHECK_THROWS_AS(load_fixtures(std::string("/nonexistent/curves.txt")),
                    std::invalid_argument);
}

TEST_CASE("match_fixture reproduces the screening") {
    auto m192 = match_fixture(2298, default_fixtures(), 192);
    CHECK(m192.any_match);
    CHECK_FALSE(m192.any_compatible);
    REQUIRE(m192.checks.size() == 1);
    CHECK(m192.checks[0].x_implied == 1);
    CHECK(m192.checks[0].detail.find("384") != std::string::npos);

    auto m640 = match_fixture(12790, default_fixtures(), 640);
    CHECK(m640.any_match);
    CHECK_FALSE(m640.any_compatible);
    CHECK(m640.checks[0].detail.find("1280") != std::string::npos);

    auto none = match_fixture(100, default_fixtures(), 100);
    CHECK_FALSE(none.any_match);
    CHECK(none.checks.empty());
}
