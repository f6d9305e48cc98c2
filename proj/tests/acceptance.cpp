// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rnagell/pipeline.hpp"

using namespace rnagell;

namespace {

Int pow_int(const Int& b, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

struct Checker {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

bool criterion_pell(Checker& c) {
    auto f79 = pell_least(79);
    c.require(f79.u1 == 80 && f79.v1 == 9, "D=79 least solution");
    auto f372 = pell_least(372);
    c.require(f372.u1 == 12151 && f372.v1 == 630, "D=372 least solution");
    auto f376 = pell_least(376);
    c.require(f376.u1 == 2143295 && f376.v1 == 110532, "D=376 least solution");
    return c.ok;
}

bool criterion_classnum(Checker& c) {
    auto cc = class_number_4D(79);
    bool narrow = cc.h_narrow == 3;
    bool wide = cc.h_wide == 3;
    c.require(narrow || wide, "neither convention gives h(4*79) = 3");
    c.note(std::string("matched convention: ") + (wide ? "cycles_mod_negation (wide)" : "cycles (narrow)") +
           ", h_narrow=" + std::to_string(cc.h_narrow) + " h_wide=" + std::to_string(cc.h_wide));
    c.require(cc.h() == 3, "selected convention is not the matching one");
    return c.ok;
}

bool criterion_antipell(Checker& c) {
    auto l372 = antipell_least(372, 743, {1});
    c.require(l372 && l372->X1 == 1427 && l372->Y1 == 74 && l372->Z1 == 1,
              "(D=372, q=743) least solution");
    auto l376 = antipell_least(376, 751, {1});
    c.require(l376 && l376->X1 == 93 && l376->Y1 == 5 && l376->Z1 == 1,
              "(D=376, q=751) least solution");
    c.require(Int(1427) * 1427 - 372 * Int(74) * 74 == -743, "1427^2 - 372*74^2 = -743");
    c.require(Int(93) * 93 - 376 * Int(5) * 5 == -751, "93^2 - 376*5^2 = -751");

    // exponent 1 is the only class-number divisor compatible with Z = 5
    auto s79 = antipell_search(79, 631, {1});
    c.require(!s79.least.has_value(), "(D=79, q=631) must have no admissible least solution");
    c.require(s79.searched.size() == 1 && s79.searched[0].bound_floor == 317,
              "exhaustive bound floor(sqrt(631(80+9 sqrt 79))) = 317");
    return c.ok;
}

bool criterion_congruence(Checker& c) {
    auto r372 = ring_power(RingElement{372, 1427, 74}, 5);
    c.require(r372.g % 3 == 1, "g = 1 (mod 3) for (1427 + 74 sqrt372)^5");
    c.require((-r372.g) % 3 != 0, "lambda = -1 branch stays nonzero mod 3");
    auto r376 = ring_power(RingElement{376, 93, 5}, 5);
    c.require(r376.g % 2 == 1, "g' odd for (93 + 5 sqrt376)^5");

    auto v372 = eliminate_triple(5, 2, 372, 372, 1);
    c.require(v372.outcome == Outcome::congruence_contradiction && v372.witness &&
                  v372.witness->modulus == 3,
              "(5,2,372) eliminated mod 3");
    auto v376 = eliminate_triple(5, 2, 376, 376, 1);
    c.require(v376.outcome == Outcome::congruence_contradiction && v376.witness &&
                  v376.witness->modulus == 2,
              "(5,2,376) eliminated mod 2");
    return c.ok;
}

bool criterion_conductors(Checker& c) {
    c.require(conductor_rn(192) == 2298, "N(192) = 2298");
    c.require(conductor_rn(640) == 12790, "N(640) = 12790");
    c.require(conductor_rn(720) == 43170, "N(720) = 43170");
    c.require(conductor_rn(724) == 523814, "N(724) = 523814");
    return c.ok;
}

bool criterion_fixtures(Checker& c) {
    auto m192 = match_fixture(2298, default_fixtures(), 192);
    c.require(m192.any_match && !m192.any_compatible, "2298h1 incompatible with k=192");
    c.require(m192.checks.size() == 1 && m192.checks[0].detail.find("384") != std::string::npos,
              "k^z = 384 unsolvable");
    auto m640 = match_fixture(12790, default_fixtures(), 640);
    c.require(m640.any_match && !m640.any_compatible, "12790b1 incompatible with k=640");
    c.require(m640.checks.size() == 1 && m640.checks[0].detail.find("1280") != std::string::npos,
              "k^z = 1280 unsolvable");
    return c.ok;
}

bool criterion_mordell_point(Checker& c) {
    auto curve = build_curve(3, 2, 664);
    Rat U("6435758912"), V("516297057335360");
    c.require(verify_point(curve, U, V), "known point on V^2 = U^3 - 1327^3 * 664^4");
    c.require(!point_to_solution(curve, SPoint{U, V}).has_value(),
              "known point yields no positive solution");
    if (verify_point(curve, Rat("402234932"), Rat("8067141520865"))) {
        c.note("generator coordinates verify exactly");
    } else {
        c.note("generator coordinates (402234932, 8067141520865) fail the exact check: "
               "recorded as a documented erratum");
    }
    return c.ok;
}

bool criterion_brute_force(Checker& c) {
    auto ks = enumerate_admissible(30, 724);
    c.require(ks.size() == 56, "56 admissible k in (30, 724)");
    for (const Int& k : ks) {
        auto sols = brute_force(k, SearchWindow{11, 11});
        bool only_trivial = sols.size() == 1 && sols[0].x == k - 1 && sols[0].y == 1 && sols[0].z == 2;
        if (!only_trivial)
            c.require(false, "k=" + k.get_str() + ": window (11,11) must contain only (k-1,1,2)");
    }
    return c.ok;
}

bool criterion_properties(Checker& c) {
    std::mt19937_64 rng(0xacce97);

    // valuation identity of the power-free split
    for (int t = 0; t < 200; ++t) {
        Int m = 2 * (1 + Int(static_cast<unsigned long>(rng() % 500'000)));
        unsigned n = 2 + static_cast<unsigned>(rng() % 10);
        auto s = power_free_split(m, n);
        unsigned of = mpz_even_p(s.f.get_mpz_t()) ? ord_p(s.f, 2) : 0;
        unsigned og = mpz_even_p(s.g.get_mpz_t()) ? ord_p(s.g, 2) : 0;
        if (ord_p(m, 2) != of + n * og || of >= n) {
            c.require(false, "valuation identity failed at m=" + m.get_str());
            break;
        }
    }

    // Pell minimality against brute force
    for (unsigned d = 2; d <= 200 && c.ok; ++d) {
        if (is_perfect_square(Int(d))) continue;
        auto f = pell_least(d);
        if (!is_pell_solution(f.D, f.u1, f.v1)) c.require(false, "pell equation check");
        if (f.v1 > 1'000'000) continue;
        for (uint64_t v = 1; v < f.v1.get_ui(); ++v) {
            uint64_t t = uint64_t(d) * v * v + 1;
            auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(t)));
            for (uint64_t cand = (r > 1 ? r - 1 : 0); cand <= r + 1; ++cand) {
                if (cand * cand == t) {
                    c.require(false, "pell minimality failed at D=" + std::to_string(d));
                    break;
                }
            }
            if (!c.ok) break;
        }
    }

    // ring_power against repeated multiplication
    RingElement base{79, 80, 9}, acc = base;
    for (unsigned t = 2; t <= 10; ++t) {
        acc = acc * base;
        auto fast = ring_power(base, t);
        if (fast.f != acc.f || fast.g != acc.g) c.require(false, "ring_power mismatch");
    }

    // solution <-> point round trip
    for (int t = 0; t < 100; ++t) {
        int i = (rng() % 2) ? 3 : 5;
        int j = static_cast<int>(rng() % 3);
        Int k = 2 + static_cast<unsigned long>(rng() % 30);
        unsigned A = static_cast<unsigned>(rng() % 3);
        unsigned B = static_cast<unsigned>(rng() % 3);
        unsigned y = 6 * A + static_cast<unsigned>(i);
        unsigned z = 3 * B + static_cast<unsigned>(j);
        if (z == 0) continue;
        Int x = 1 + static_cast<unsigned long>(rng() % 1000);
        auto curve = build_curve(i, j, k);
        if (gcd(x, curve.k) != 1 || gcd(x, curve.q) != 1) continue;
        auto sol = point_to_solution(curve, solution_to_point(x, y, z, curve));
        if (!sol || sol->x != x || sol->y != y || sol->z != z) {
            c.require(false, "round trip failed");
            break;
        }
    }

    // reduced-form cycle closure
    for (long disc : {8L, 316L, 1488L, 1504L}) {
        auto forms = reduced_forms(disc);
        auto cycles = form_cycles(disc);
        size_t total = 0;
        for (const auto& cyc : cycles) {
            total += cyc.size();
            QuadForm g = cyc.front();
            for (size_t s = 0; s < cyc.size(); ++s) g = reduction_step(g);
            if (!(g == cyc.front())) c.require(false, "cycle does not close");
        }
        if (total != forms.size()) c.require(false, "cycles do not partition the forms");
    }
    return c.ok;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<bool(Checker&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Pell least solutions (D = 79, 372, 376)", criterion_pell},
        {2, "class number h(4*79) = 3 under a recorded convention", criterion_classnum},
        {3, "anti-Pell least solutions and the 317 bound", criterion_antipell},
        {4, "congruence eliminations of (5,2,372) and (5,2,376)", criterion_congruence},
        {5, "conductors 2298, 12790, 43170, 523814", criterion_conductors},
        {6, "fixture quintuples incompatible (384 and 1280)", criterion_fixtures},
        {7, "known S-integral point on the (3,2,664) curve", criterion_mordell_point},
        {8, "brute-force window (11,11): only (k-1,1,2) for all 56 admissible k", criterion_brute_force},
        {9, "property suites (valuation, minimality, powers, round trip, cycles)", criterion_properties},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = cr.run(c);
        } catch (const std::exception& e) {
            error = e.what();
            c.ok = false;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("[%s] criterion %d: %s (%lld ms)\n", ok ? "PASS" : "FAIL", cr.number,
                    cr.title, static_cast<long long>(ms));
        if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
        for (const auto& d : c.details) std::printf("       %s\n", d.c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
