#pragma once

#include <optional>
#include <vector>

#include "rnagell/arith.hpp"

namespace rnagell {

/// V^2 = U^3 - (2k-1)^i k^(2j). The set S of allowed denominator primes is
/// the single prime dividing q = 2k-1 (q itself may be a prime power).
struct MordellCurve {
    int i = 0, j = 0;
    Int k;
    Int q;        // 2k - 1
    Int s_prime;  // rad(q)
    Int coeff;    // -q^i * k^(2j)
};

MordellCurve build_curve(int i, int j, const Int& k);

/// Exact rational point; for images of solutions the denominators are
/// q^(2A) and q^(3A) for a common A >= 0.
struct SPoint {
    Rat U, V;
};

struct Solution {
    Int x;
    unsigned y = 0, z = 0;
};

/// Maps a (hypothetical) solution with y = 6A+i, z = 3B+j to the point
/// (k^(B+j)/q^(2A), x k^j / q^(3A)). The point is on the curve exactly when
/// x^2 + q^y = k^z:  V^2 - U^3 - coeff = k^(2j) (x^2 + q^y - k^z) / q^(6A).
SPoint solution_to_point(const Int& x, unsigned y, unsigned z, const MordellCurve& curve);

/// On-curve and S-integral, both exact.
bool verify_point(const MordellCurve& curve, const Rat& U, const Rat& V);

/// Inverts the solution map; nullopt when the point is not of the mapped
/// shape or the recovered (x, y, z) is not a positive solution.
std::optional<Solution> point_to_solution(const MordellCurve& curve, const SPoint& pt);

/// Every S-integral point with denominator exponent A <= maxA and
/// |numerator(U)| <= maxNum, by exhaustive scan; V is canonicalized to >= 0.
/// Complete within the stated box only.
std::vector<SPoint> bounded_s_point_search(const MordellCurve& curve, unsigned maxA,
                                           const Int& maxNum);

}  // namespace rnagell
