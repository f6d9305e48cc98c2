#include "rnagell/mordell.hpp"

#include "u128.hpp"

namespace rnagell {

namespace {

Int pow_int(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// exponent e with den = base^e, or nullopt
std::optional<unsigned> power_exponent(const Int& value, const Int& base) {
    if (value == 1) return 0u;
    if (base < 2) return std::nullopt;
    Int rest = value;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), base.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return e;
}

}  // namespace

MordellCurve build_curve(int i, int j, const Int& k) {
    if (i != 3 && i != 5) throw std::invalid_argument("build_curve: i must be 3 or 5");
    if (j < 0 || j > 2) throw std::invalid_argument("build_curve: j must be 0, 1 or 2");
    if (k < 2) throw std::invalid_argument("build_curve: k must be >= 2");
    MordellCurve c;
    c.i = i;
    c.j = j;
    c.k = k;
    c.q = 2 * k - 1;
    c.s_prime = radical(c.q);
    c.coeff = -pow_int(c.q, i) * pow_int(k, 2 * j);
    return c;
}

SPoint solution_to_point(const Int& x, unsigned y, unsigned z, const MordellCurve& curve) {
    if (y % 6 != static_cast<unsigned>(curve.i) || y < static_cast<unsigned>(curve.i))
        throw std::invalid_argument("solution_to_point: y must be i (mod 6), y >= i");
    if (z % 3 != static_cast<unsigned>(curve.j) || z < static_cast<unsigned>(curve.j))
        throw std::invalid_argument("solution_to_point: z must be j (mod 3), z >= j");
    unsigned A = (y - curve.i) / 6;
    unsigned B = (z - curve.j) / 3;
    Rat U(pow_int(curve.k, B + curve.j), pow_int(curve.q, 2 * A));
    Rat V(x * pow_int(curve.k, curve.j), pow_int(curve.q, 3 * A));
    U.canonicalize();
    V.canonicalize();
    return SPoint{U, V};
}

bool verify_point(const MordellCurve& curve, const Rat& U, const Rat& V) {
    if (V * V != U * U * U + curve.coeff) return false;
    return power_exponent(U.get_den(), curve.s_prime).has_value() &&
           power_exponent(V.get_den(), curve.s_prime).has_value();
}

std::optional<Solution> point_to_solution(const MordellCurve& curve, const SPoint& pt) {
    // denominators must be q^(2A) and q^(3A)
    auto eu = power_exponent(pt.U.get_den(), curve.q);
    auto ev = power_exponent(pt.V.get_den(), curve.q);
    if (!eu || !ev) return std::nullopt;
    if (*eu % 2 != 0) return std::nullopt;
    unsigned A = *eu / 2;
    if (*ev != 3 * A) return std::nullopt;

    // U q^(2A) = k^(B+j), V q^(3A) = x k^j
    Int unum = pt.U.get_num();
    auto ek = power_exponent(unum, curve.k);
    if (!ek || *ek < static_cast<unsigned>(curve.j)) return std::nullopt;
    unsigned B = *ek - curve.j;

    Int vnum = pt.V.get_num();
    Int kj = pow_int(curve.k, curve.j);
    if (vnum <= 0 || !mpz_divisible_p(vnum.get_mpz_t(), kj.get_mpz_t())) return std::nullopt;
    Int x = vnum / kj;
    if (gcd(x, curve.k) != 1) return std::nullopt;

    unsigned y = 6 * A + curve.i;
    unsigned z = 3 * B + curve.j;
    if (z < 1) return std::nullopt;
    // for a point on the curve, the shape already forces x^2 + q^y = k^z
    return Solution{x, y, z};
}

std::vector<SPoint> bounded_s_point_search(const MordellCurve& curve, unsigned maxA,
                                           const Int& maxNum) {
    if (maxNum < 1) throw std::invalid_argument("bounded_s_point_search: maxNum must be >= 1");
    std::vector<SPoint> out;
    Int M0 = -curve.coeff;  // positive
    for (unsigned A = 0; A <= maxA; ++A) {
        Int den2 = pow_int(curve.s_prime, 2 * A);
        Int den3 = pow_int(curve.s_prime, 3 * A);
        Int M = M0 * pow_int(curve.s_prime, 6 * A);
        // V^2 = (a^3 - M) / s^(6A): a must reach cbrt(M) before squares appear
        Int a_start;
        mpz_root(a_start.get_mpz_t(), M.get_mpz_t(), 3);
        while (a_start * a_start * a_start < M) ++a_start;
        if (a_start > maxNum) continue;

        auto emit = [&](const Int& a, const Int& b) {
            if (A > 0 && mpz_divisible_p(a.get_mpz_t(), curve.s_prime.get_mpz_t()))
                return;  // not in lowest terms; found at a smaller A
            Rat U(a, den2), V(b, den3);
            U.canonicalize();
            V.canonicalize();
            out.push_back(SPoint{U, V});
        };

        Int worst = maxNum * maxNum * maxNum;
        if (detail::fits_u128(worst) && detail::fits_u128(M)) {
            detail::u128 m = detail::to_u128(M);
            detail::u128 a = detail::to_u128(a_start);
            detail::u128 cap = detail::to_u128(maxNum);
            for (; a <= cap; ++a) {
                detail::u128 t = a * a * a - m;
                uint64_t root;
                if (!detail::is_square_u128(t, &root)) continue;
                emit(detail::from_u128(a), Int(static_cast<unsigned long>(root)));
            }
        } else {
            for (Int a = a_start; a <= maxNum; ++a) {
                Int t = a * a * a - M;
                auto [b, exact] = integer_sqrt(t);
                if (exact) emit(a, b);
            }
        }
    }
    return out;
}

}  // namespace rnagell
