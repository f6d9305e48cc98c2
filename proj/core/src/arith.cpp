#include "rnagell/arith.hpp"

#include <algorithm>

namespace rnagell {

namespace {

constexpr uint32_t kTrialLimit = 1'000'000;

// Largest n for which the witness set {2,...,37} is a proven deterministic
// Miller-Rabin test (Sorenson-Webster): 3,317,044,064,679,887,385,961,981.
const Int& witness_range_limit() {
    static const Int limit("3317044064679887385961981");
    return limit;
}

bool miller_rabin(const Int& n) {
    // n odd, n > 37 here
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    static const unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    Int x, nm1 = n - 1;
    for (unsigned a : witnesses) {
        Int base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= kTrialLimit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (mpz_cmp_ui(n.get_mpz_t(), kTrialLimit) <= 0) {
        uint32_t v = static_cast<uint32_t>(n.get_ui());
        const auto& ps = small_primes();
        return std::binary_search(ps.begin(), ps.end(), v);
    }
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    if (n >= witness_range_limit())
        throw BudgetExceeded("primality certification beyond deterministic witness range");
    return miller_rabin(n);
}

Factorization factorize(const Int& m) {
    if (m < 1) throw std::invalid_argument("factorize: m must be >= 1");
    Factorization out;
    out.value = m;
    Int rest = m;
    for (uint32_t p : small_primes()) {
        if (Int(p) * p > rest) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        do {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
        out.factors.emplace_back(Int(p), e);
    }
    if (rest > 1) {
        // No factor <= min(10^6, sqrt): the cofactor is prime or out of budget.
        if (!is_prime(rest))
            throw BudgetExceeded("factorize: composite cofactor " + rest.get_str() +
                                 " has no factor below the trial limit");
        out.factors.emplace_back(rest, 1u);
    }
    return out;
}

Int Factorization::radical() const {
    Int r = 1;
    for (const auto& [p, e] : factors) r *= p;
    return r;
}

Factorization Factorization::pow(unsigned e) const {
    if (e == 0) throw std::invalid_argument("Factorization::pow: exponent must be >= 1");
    Factorization out;
    mpz_pow_ui(out.value.get_mpz_t(), value.get_mpz_t(), e);
    out.factors.reserve(factors.size());
    for (const auto& [p, k] : factors) out.factors.emplace_back(p, k * e);
    return out;
}

bool Factorization::reconstructs() const {
    Int prod = 1, t;
    for (const auto& [p, e] : factors) {
        mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e);
        prod *= t;
    }
    return prod == value;
}

Int radical(const Int& m) {
    return factorize(m).radical();
}

unsigned ord_p(const Int& m, const Int& p) {
    if (m == 0) throw std::invalid_argument("ord_p: valuation of 0 is undefined");
    if (!is_prime(p)) throw std::invalid_argument("ord_p: p must be prime");
    Int rest = abs(m);
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

PowerFreeSplit power_free_split(const Factorization& fact, unsigned n) {
    if (n < 2) throw std::invalid_argument("power_free_split: n must be >= 2");
    PowerFreeSplit out{fact.value, n, 1, 1};
    Int t;
    for (const auto& [p, e] : fact.factors) {
        if (e % n) {
            mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e % n);
            out.f *= t;
        }
        if (e / n) {
            mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e / n);
            out.g *= t;
        }
    }
    return out;
}

PowerFreeSplit power_free_split(const Int& m, unsigned n) {
    return power_free_split(factorize(m), n);
}

std::optional<std::pair<Int, unsigned>> is_odd_prime_power(const Int& m) {
    if (m < 1) throw std::invalid_argument("is_odd_prime_power: m must be >= 1");
    if (m == 1 || mpz_even_p(m.get_mpz_t())) return std::nullopt;
    auto fact = factorize(m);
    if (fact.factors.size() != 1) return std::nullopt;
    return std::make_pair(fact.factors[0].first, fact.factors[0].second);
}

std::pair<Int, bool> integer_sqrt(const Int& m) {
    if (m < 0) throw std::invalid_argument("integer_sqrt: m must be >= 0");
    Int s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    return {s, rem == 0};
}

bool is_perfect_square(const Int& m) {
    return m >= 0 && mpz_perfect_square_p(m.get_mpz_t());
}

int sign_quad(const Int& a, const Int& b, const Int& D) {
    int sa = sgn(a), sb = sgn(b);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // opposite signs: compare a^2 against b^2 * D (equality impossible for
    // nonsquare D with b != 0)
    Int lhs = a * a, rhs = b * b * D;
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

std::vector<unsigned> divisors(unsigned n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rnagell
