#pragma once

#include <optional>
#include <vector>

#include "rnagell/pell.hpp"
#include "rnagell/qform.hpp"

namespace rnagell {

/// f + g sqrt(D), closed under exact multiplication.
struct RingElement {
    Int D;
    Int f;
    Int g;

    RingElement operator*(const RingElement& o) const {
        return RingElement{D, f * o.f + D * g * o.g, f * o.g + g * o.f};
    }
};

/// Exact t-th power in Z[sqrt(D)], t >= 1.
RingElement ring_power(const RingElement& base, unsigned t);

/// Least solution of X^2 - D Y^2 = (-q)^Z: coprime positive (X1, Y1) with
/// 1 < |(X1 + Y1 sqrt D)/(X1 - Y1 sqrt D)| < u1 + v1 sqrt D.
struct AntiPellLeast {
    Int D;
    Int q;
    Int X1;
    Int Y1;
    unsigned Z1 = 0;
};

/// One exhausted exponent: everything with X + Y sqrt(D) <= bound_floor + 1
/// was scanned, where bound_floor = floor(sqrt(q^Z (u1 + v1 sqrt D))).
struct SearchedZ {
    unsigned Z;
    Int bound_floor;
};

struct AntiPellSearch {
    std::optional<AntiPellLeast> least;
    std::vector<SearchedZ> searched;  // ascending Z, stops at the hit
};

/// Exhaustive window search over the allowed exponents, ascending; the right
/// side is -q^Z for odd Z and +q^Z for even Z. Returns the first hit
/// (smallest Z, then smallest Y). Rejects gcd(D, q) > 1 and empty allowed_Z.
AntiPellSearch antipell_search(const Int& D, const Int& q,
                               const std::vector<unsigned>& allowed_Z);

std::optional<AntiPellLeast> antipell_least(const Int& D, const Int& q,
                                            const std::vector<unsigned>& allowed_Z);

/// Exact floor of sqrt(q^Z (u1 + v1 sqrt D)).
Int window_bound_floor(const PellFundamental& fund, const Int& q, unsigned Z);

/// Evidence that X + Y sqrt(D) = (X1 + lambda Y1 sqrt D)^t (u + v sqrt D)
/// forces g = 0 (mod modulus) while the computed g is not: the residues of
/// +g and -g cover both lambda branches, and u is invertible because
/// u^2 = 1 (mod modulus) whenever modulus | v.
struct CongruenceWitness {
    Int modulus;
    unsigned t;
    Int g_mod_plus;   // g mod m, lambda = +1
    Int g_mod_minus;  // -g mod m, lambda = -1
};

/// Rejects a modulus that does not divide v1 (the v = 0 mod v1 step would
/// be unsound). Returns the witness when both branches are contradictory,
/// nullopt when g = 0 (mod modulus) and nothing is learned.
std::optional<CongruenceWitness> congruence_eliminate(const AntiPellLeast& least,
                                                      unsigned t,
                                                      const PellFundamental& fund,
                                                      const Int& modulus);

enum class Outcome {
    no_least_solution,
    congruence_contradiction,
    unresolved,
};

const char* outcome_name(Outcome o);

/// Full audit record for one triple elimination; everything needed to
/// re-evaluate the verdict is carried along.
struct EliminationVerdict {
    int i = 0, j = 0;
    Int k, D, cofactor, q;
    ClassCount counts;
    std::vector<unsigned> allowed_Z;       // divisors(max count) meet divisors(i)
    AntiPellSearch search;
    PellFundamental fund;
    unsigned t = 0;                        // i / Z1 when a least solution exists
    std::vector<Int> moduli_tried;         // primes of gcd(rad(v1), rad(k))
    std::optional<CongruenceWitness> witness;
    Outcome outcome = Outcome::unresolved;
};

/// Attempt to rule out x^2 + q^i = k^z (z > i odd, q = 2k-1) through the
/// least-solution and congruence arguments, with k = cofactor^2 * D.
EliminationVerdict eliminate_triple(int i, int j, const Int& k, const Int& D,
                                    const Int& cofactor);

}  // namespace rnagell
