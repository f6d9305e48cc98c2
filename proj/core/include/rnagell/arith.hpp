#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rnagell {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when trial division plus primality certification cannot finish
/// within the configured bound (composite cofactor with no factor below the
/// trial limit, or an input outside the deterministic witness range).
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Prime factorization with certified prime bases, ascending.
struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), exponent >= 1

    /// Product of the distinct primes.
    Int radical() const;
    /// Factorization of value^e, for e >= 1. Exponentiated quantities inherit
    /// their base factorization; they are never factored directly.
    Factorization pow(unsigned e) const;
    /// True iff the factor list multiplies back to value.
    bool reconstructs() const;
};

/// Primes below the trial-division limit (10^6), sieved once.
const std::vector<uint32_t>& small_primes();

/// Deterministic primality: trial division for small n, then Miller-Rabin
/// with the fixed witness set {2,3,...,37}, valid for all n < 3.317e24
/// (covers everything past 64 bits that this library ever certifies).
bool is_prime(const Int& n);

/// Factor m >= 1 by trial division up to 10^6 followed by certification of
/// the cofactor. Throws BudgetExceeded if the cofactor is composite.
Factorization factorize(const Int& m);

/// rad(m): product of the distinct primes dividing m; rad(1) = 1.
Int radical(const Int& m);

/// p-adic valuation ord_p(m) for m != 0, p prime.
unsigned ord_p(const Int& m, const Int& p);

/// m = f * g^n with f free of n-th powers.
struct PowerFreeSplit {
    Int m;
    unsigned n;
    Int f;
    Int g;
};

PowerFreeSplit power_free_split(const Int& m, unsigned n);
PowerFreeSplit power_free_split(const Factorization& fact, unsigned n);

/// (p, e) with m = p^e, p an odd prime, e >= 1; nullopt otherwise
/// (in particular for m = 1 and even m).
std::optional<std::pair<Int, unsigned>> is_odd_prime_power(const Int& m);

/// (floor(sqrt(m)), exact) for m >= 0; exact iff m is a perfect square.
std::pair<Int, bool> integer_sqrt(const Int& m);

bool is_perfect_square(const Int& m);

/// Exact sign of a + b*sqrt(D) for nonsquare D > 0; never touches floats.
int sign_quad(const Int& a, const Int& b, const Int& D);

/// Divisors of a small positive integer, ascending.
std::vector<unsigned> divisors(unsigned n);

}  // namespace rnagell
