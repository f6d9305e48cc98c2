#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rnagell/arith.hpp"

namespace rnagell {

/// Parameters of A a^n + B b^n = C c^2 attached to a hypothetical solution
/// of x^2 + (2k-1)^n = k^z: A = -1, a = 2k-1, B b^n = k^z with B free of
/// n-th powers, C = 1, c = (-1)^((x-1)/2) x. The x is a placeholder; only
/// its residue mod 4 matters for the sign of c.
struct FreyParams {
    unsigned n = 0;
    Int A, a, B, b, C, c;
    Int k;
    unsigned z = 0;
    Int x;
};

FreyParams build_frey_params(const Int& k, unsigned z, const Int& x, unsigned n);

/// The five parity/valuation situations of the signature-(n,n,2) recipes.
enum class SignatureCase { i = 1, ii, iii, iv, v };

/// Case tag with the 2-exponents it pins down: alpha in the conductor
/// 2^alpha C^2 rad(abAB), delta in the discriminant 2^delta C^3 B^2 A (a b^2)^n.
struct CaseTag {
    SignatureCase tag;
    int alpha;
    int delta;
};

const char* case_name(SignatureCase c);

/// First matching case (i)-(v); throws std::domain_error when none applies.
CaseTag classify_case(const FreyParams& p);

/// ord_2(B b^n) >= 6 for the parameters attached to (k, z, n).
bool lemma35_check(const Int& k, unsigned z, unsigned n);

/// Exact discriminant 2^delta C^3 B^2 A (a b^2)^n (rational: delta may be -12).
Rat discriminant(const FreyParams& p, const CaseTag& tag);

/// rad(2k-1) * rad(k), the conductor with alpha = 0.
Int conductor_rn(const Int& k);

/// One curve record: label, conductor and Weierstrass a-invariants
/// [a1, a2, a3, a4, a6].
struct CurveFixture {
    std::string label;
    Int conductor;
    std::array<Int, 5> a;

    Int weierstrass_disc() const;
};

/// The two embedded curves the screening needs: 2298h1 = [1,0,0,6,0] and
/// 12790b1 = [1,0,0,20,0].
const std::vector<CurveFixture>& default_fixtures();

/// Plain-text table, one record per line: label conductor a1 a2 a3 a4 a6.
/// Lines starting with '#' are ignored.
std::vector<CurveFixture> load_fixtures(std::istream& in);
std::vector<CurveFixture> load_fixtures(const std::string& path);

/// Result of testing one fixture against the shape [1, (x-1)/4, 0, k^z/64, 0].
struct FixtureCheck {
    std::string label;
    Int conductor;
    bool shape_ok = false;          // a1 = 1, a3 = 0, a6 = 0
    Int x_implied;                  // 4 a2 + 1
    std::optional<unsigned> z_solution;  // odd z >= 9 with k^z = 64 a4
    bool compatible = false;
    std::string detail;
};

struct FixtureMatch {
    Int conductor;
    Int k;
    std::vector<FixtureCheck> checks;  // fixtures whose conductor equals N
    bool any_match = false;            // some fixture lives at this conductor
    bool any_compatible = false;       // ... and is compatible with the shape
};

FixtureMatch match_fixture(const Int& N, const std::vector<CurveFixture>& fixtures,
                           const Int& k);

}  // namespace rnagell
