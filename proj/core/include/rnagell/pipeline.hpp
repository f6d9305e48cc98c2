#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rnagell/antipell.hpp"
#include "rnagell/frey.hpp"
#include "rnagell/mordell.hpp"

namespace rnagell {

struct SearchWindow {
    unsigned y_max = 11;
    unsigned z_max = 11;
};

/// All k in the open interval (lo, hi) with 4 | k and 2k-1 an odd prime
/// power, ascending.
std::vector<Int> enumerate_admissible(const Int& lo, const Int& hi);

enum class LemmaVerdict {
    accepted,
    rejected_even_y,          // x^2 + 1 = 0 (mod 4) is impossible
    rejected_z_not_greater,   // nontrivial solutions need z > y
    rejected_even_z,
};

const char* lemma_verdict_name(LemmaVerdict v);

/// Admissibility of a candidate exponent pair for a nontrivial solution.
LemmaVerdict lemma_filter(const Int& k, unsigned y, unsigned z);

/// Replay of the square-k exclusion: for k = ell^2 the factorization
/// (ell^z - x)(ell^z + x) = (2k-1)^y forces 2 ell^z = (2k-1)^y + 1, and the
/// quotient ((2k-1)^y + 1)/((2k-1) + 1) is odd for every odd y, forcing z = 2.
struct Lemma34Step {
    unsigned y;
    Int quotient;
    bool odd;
};

struct Lemma34Trace {
    Int k;
    Int ell;
    std::vector<Lemma34Step> steps;
    bool z2_forced = false;  // all sampled quotients odd
};

Lemma34Trace lemma34_audit(const Int& k,
                           const std::vector<unsigned>& sample_y = {1, 3, 5, 7, 9});

/// Exhaustive solutions of x^2 + (2k-1)^y = k^z inside the window.
std::vector<Solution> brute_force(const Int& k, const SearchWindow& window);

enum class KStatus {
    excluded_power_of_two,
    excluded_square,
    conductor_screened,
    triple_dispatch,
    uncovered,
};

const char* status_name(KStatus s);

/// (D, cofactor) used for the least-solution elimination of each of the
/// seven (5,2,k) triples the descent machinery left open.
struct TripleParams {
    int i, j;
    Int k;
    Int D;
    Int cofactor;
};

const std::vector<TripleParams>& builtin_elimination_table();

/// Built-in (D, cofactor) for the elimination at k: (79, 2) for k = 316,
/// (k, 1) otherwise.
TripleParams default_triple_params(int i, int j, const Int& k);

struct TripleReport {
    int i = 0, j = 0;
    std::string verdict;
    std::vector<SPoint> points;        // bounded-search finds
    std::optional<EliminationVerdict> elimination;
};

struct CaseReport {
    Int k;
    Int d;  // 2k - 1
    KStatus status = KStatus::conductor_screened;
    std::optional<Int> conductor;
    std::optional<FixtureMatch> fixture;
    std::optional<Lemma34Trace> lemma34;
    std::vector<TripleReport> triples;
    SearchWindow window;
    std::vector<Solution> solutions;   // brute-force finds
    std::vector<std::string> notes;    // caveats and conventions
    std::vector<std::string> problems; // anything contradicting the expected outcome
};

/// Status-only classification (exclusion lemmas, else conductor screening).
CaseReport classify_k(const Int& k);

struct AuditParams {
    Int lo = 30;
    Int hi = 724;
    SearchWindow window;
    unsigned search_max_denom_exp = 2;
    Int search_max_numerator = 10'000'000;
    std::vector<CurveFixture> fixtures;  // default_fixtures() when empty
};

struct AuditResult {
    std::string version;
    AuditParams params;
    std::vector<CaseReport> reports;
    bool all_clear = false;  // no problems and no unresolved verdict anywhere
};

CaseReport audit_k(const Int& k, const AuditParams& params);
AuditResult run_audit(const AuditParams& params);

/// Odd exponents y = 1 (mod 6), y > 1, with every prime factor <= 5: the
/// case split reaches neither the prime-exponent screen nor the 3,5 (mod 6)
/// reduction for them.
std::vector<unsigned> uncovered_exponents(unsigned horizon);

/// JSON report: {version, parameters, reports}; arbitrary-precision values
/// are emitted as decimal strings.
std::string audit_to_json(const AuditResult& result);

}  // namespace rnagell
