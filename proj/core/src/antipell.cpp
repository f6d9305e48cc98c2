#include "rnagell/antipell.hpp"

#include <algorithm>
#include <cassert>

#include "u128.hpp"

namespace rnagell {

namespace {

using detail::u128;

Int pow_int(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// (X + Y sqrt D)^2 < q^Z (u1 + v1 sqrt D), exactly.
bool inside_window(const Int& X, const Int& Y, const Int& D, const Int& qZ,
                   const PellFundamental& fund) {
    Int a = qZ * fund.u1 - (X * X + D * Y * Y);
    Int b = qZ * fund.v1 - 2 * X * Y;
    return sign_quad(a, b, D) > 0;
}

// (X + Y sqrt D)^2 > q^Z, exactly (the lower half of the window).
bool above_lower_bound(const Int& X, const Int& Y, const Int& D, const Int& qZ) {
    Int a = X * X + D * Y * Y - qZ;
    Int b = 2 * X * Y;
    return sign_quad(a, b, D) > 0;
}

struct ZScan {
    std::optional<std::pair<Int, Int>> hit;  // smallest-Y (X, Y) inside the window
    Int bound_floor;
};

ZScan scan_exponent(const Int& D, const Int& q, unsigned Z, const PellFundamental& fund) {
    ZScan out;
    Int qZ = pow_int(q, Z);
    out.bound_floor = window_bound_floor(fund, q, Z);

    bool negative_rhs = (Z % 2 == 1);  // (-q)^Z
    // Any candidate has X + Y sqrt(D) <= bound, so D Y^2 <= (bound+1)^2 caps Y.
    Int y_cap = integer_sqrt((out.bound_floor + 2) * (out.bound_floor + 2) / D).first + 1;
    if (y_cap > Int("8000000000"))
        throw BudgetExceeded("antipell search: window too wide (Y cap " + y_cap.get_str() + ")");

    Int y_start = 1;
    if (negative_rhs) {
        // smallest Y with D Y^2 >= q^Z, so that X^2 = D Y^2 - q^Z is a square at all
        y_start = integer_sqrt(qZ / D).first;
        if (y_start < 1) y_start = 1;
        while (y_start > 1 && D * (y_start - 1) * (y_start - 1) >= qZ) --y_start;
        while (D * y_start * y_start < qZ) ++y_start;
    }

    auto consider = [&](const Int& X, const Int& Y) -> bool {
        if (X < 1) return false;
        if (gcd(X, Y) != 1) return false;
        if (!inside_window(X, Y, D, qZ, fund)) return false;
        assert(above_lower_bound(X, Y, D, qZ));
        out.hit = {X, Y};
        return true;
    };

    Int worst = D * (y_cap + 1) * (y_cap + 1) + qZ;
    if (detail::fits_u128(worst) && detail::fits_u128(y_cap)) {
        u128 d128 = detail::to_u128(D);
        u128 q128 = detail::to_u128(qZ);
        u128 y = detail::to_u128(y_start);
        u128 cap = detail::to_u128(y_cap);
        for (; y <= cap; ++y) {
            u128 dy2 = d128 * y * y;
            u128 x2 = negative_rhs ? dy2 - q128 : dy2 + q128;
            uint64_t root;
            if (!detail::is_square_u128(x2, &root)) continue;
            Int X = detail::from_u128(root);
            Int Y = detail::from_u128(y);
            if (consider(X, Y)) return out;
        }
        return out;
    }

    for (Int Y = y_start; Y <= y_cap; ++Y) {
        Int x2 = D * Y * Y;
        if (negative_rhs)
            x2 -= qZ;
        else
            x2 += qZ;
        auto [X, exact] = integer_sqrt(x2);
        if (!exact) continue;
        if (consider(X, Y)) return out;
    }
    return out;
}

}  // namespace

RingElement ring_power(const RingElement& base, unsigned t) {
    if (t < 1) throw std::invalid_argument("ring_power: t must be >= 1");
    RingElement acc{base.D, 1, 0};
    RingElement sq = base;
    unsigned e = t;
    while (e) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

Int window_bound_floor(const PellFundamental& fund, const Int& q, unsigned Z) {
    Int qZ = pow_int(q, Z);
    Int C = qZ * fund.u1;
    Int E = qZ * fund.v1;
    // floor of sqrt(C + E sqrt D) by bisection between the integer-sqrt
    // brackets (a0 and a0 + 1 straddle sqrt D)
    Int a0 = integer_sqrt(fund.D).first;
    Int lo = integer_sqrt(C + E * a0).first;            // s^2 <= C + E sqrt D holds here
    Int hi = integer_sqrt(C + E * (a0 + 1)).first + 1;  // and fails here
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (sign_quad(C - mid * mid, E, fund.D) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

AntiPellSearch antipell_search(const Int& D, const Int& q,
                               const std::vector<unsigned>& allowed_Z) {
    if (D < 2 || is_perfect_square(D))
        throw std::invalid_argument("antipell: D must be a nonsquare integer >= 2");
    if (!is_odd_prime_power(q))
        throw std::invalid_argument("antipell: q must be an odd prime power");
    if (gcd(D, q) != 1) throw std::invalid_argument("antipell: gcd(D, q) must be 1");
    if (allowed_Z.empty()) throw std::invalid_argument("antipell: allowed_Z must not be empty");

    auto fund = pell_least(D);
    std::vector<unsigned> zs = allowed_Z;
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

    AntiPellSearch out;
    for (unsigned Z : zs) {
        if (Z == 0) throw std::invalid_argument("antipell: exponents must be positive");
        auto scan = scan_exponent(D, q, Z, fund);
        out.searched.push_back(SearchedZ{Z, scan.bound_floor});
        if (scan.hit) {
            out.least = AntiPellLeast{D, q, scan.hit->first, scan.hit->second, Z};
            break;
        }
    }
    return out;
}

std::optional<AntiPellLeast> antipell_least(const Int& D, const Int& q,
                                            const std::vector<unsigned>& allowed_Z) {
    return antipell_search(D, q, allowed_Z).least;
}

std::optional<CongruenceWitness> congruence_eliminate(const AntiPellLeast& least,
                                                      unsigned t,
                                                      const PellFundamental& fund,
                                                      const Int& modulus) {
    if (!is_prime(modulus)) throw std::invalid_argument("congruence_eliminate: modulus must be prime");
    if (!mpz_divisible_p(fund.v1.get_mpz_t(), modulus.get_mpz_t()))
        throw std::invalid_argument("congruence_eliminate: modulus must divide v1");
    if (t < 1) throw std::invalid_argument("congruence_eliminate: t must be >= 1");

    RingElement power = ring_power(RingElement{least.D, least.X1, least.Y1}, t);
    Int g_mod = power.g % modulus;
    if (g_mod < 0) g_mod += modulus;
    if (g_mod == 0) return std::nullopt;

    CongruenceWitness w;
    w.modulus = modulus;
    w.t = t;
    w.g_mod_plus = g_mod;
    w.g_mod_minus = (modulus - g_mod) % modulus;
    return w;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::no_least_solution: return "no_least_solution";
        case Outcome::congruence_contradiction: return "congruence_contradiction";
        case Outcome::unresolved: return "unresolved";
    }
    return "?";
}

EliminationVerdict eliminate_triple(int i, int j, const Int& k, const Int& D,
                                    const Int& cofactor) {
    if (i != 3 && i != 5) throw std::invalid_argument("eliminate_triple: i must be 3 or 5");
    if (j < 0 || j > 2) throw std::invalid_argument("eliminate_triple: j must be 0, 1 or 2");
    if (cofactor < 1 || k != cofactor * cofactor * D)
        throw std::invalid_argument("eliminate_triple: need k = cofactor^2 * D");
    Int q = 2 * k - 1;
    if (!is_odd_prime_power(q))
        throw std::invalid_argument("eliminate_triple: 2k-1 must be an odd prime power");

    EliminationVerdict v;
    v.i = i;
    v.j = j;
    v.k = k;
    v.D = D;
    v.cofactor = cofactor;
    v.q = q;
    v.counts = class_number_4D(D);

    // A solution with exponent Z = i forces Z1 | i on top of Z1 | h(4D);
    // the larger of the two counts is a safe superset when they differ.
    unsigned h_bound = std::max(v.counts.h_narrow, v.counts.h_wide);
    for (unsigned d : divisors(h_bound))
        if (static_cast<unsigned>(i) % d == 0) v.allowed_Z.push_back(d);

    v.fund = pell_least(D);
    v.search = antipell_search(D, q, v.allowed_Z);
    if (!v.search.least) {
        v.outcome = Outcome::no_least_solution;
        return v;
    }

    const auto& least = *v.search.least;
    v.t = static_cast<unsigned>(i) / least.Z1;

    // Moduli that make Y = cofactor * k^((z-1)/2) vanish while also pinning
    // v = 0: the primes dividing both rad(v1) and rad(k).
    Int m_common = gcd(radical(v.fund.v1), radical(k));
    for (const auto& [p, e] : factorize(m_common).factors) v.moduli_tried.push_back(p);

    for (const Int& m : v.moduli_tried) {
        auto w = congruence_eliminate(least, v.t, v.fund, m);
        if (w) {
            v.witness = w;
            v.outcome = Outcome::congruence_contradiction;
            return v;
        }
    }
    v.outcome = Outcome::unresolved;
    return v;
}

}  // namespace rnagell
