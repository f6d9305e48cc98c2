#include "rnagell/pell.hpp"

#include <cassert>

namespace rnagell {

namespace {

// One step of the sqrt(D) continued-fraction recurrence:
//   P' = a*Q - P,  Q' = (D - P'^2)/Q,  a' = (a0 + P')/Q'.
// All divisions are exact / floor on nonnegative operands.
struct CfState {
    Int P, Q, a;
    void step(const Int& D, const Int& a0) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (a0 + P) / Q;
    }
};

unsigned cf_period(const Int& D, const Int& a0) {
    CfState st{0, 1, a0};
    Int two_a0 = 2 * a0;
    unsigned len = 0;
    do {
        st.step(D, a0);
        ++len;
        if (len > 100'000'000u) throw BudgetExceeded("pell_least: period out of range");
    } while (st.a != two_a0);
    return len;
}

}  // namespace

PellFundamental pell_least(const Int& D) {
    if (D < 2) throw std::invalid_argument("pell_least: D must be >= 2");
    auto [a0, exact] = integer_sqrt(D);
    if (exact) throw std::invalid_argument("pell_least: D must not be a perfect square");

    unsigned period = cf_period(D, a0);
    // The norm-one convergent sits at index period-1 when the period is even,
    // at 2*period-1 when odd (indices count convergents p_i/q_i from i = 0).
    unsigned target = (period % 2 == 0) ? period - 1 : 2 * period - 1;

    CfState st{0, 1, a0};
    Int p_prev = 1, p_cur = a0;   // p_{-1}, p_0
    Int q_prev = 0, q_cur = 1;    // q_{-1}, q_0
    for (unsigned i = 1; i <= target; ++i) {
        st.step(D, a0);
        Int p_next = st.a * p_cur + p_prev;
        Int q_next = st.a * q_cur + q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
    }
    assert(p_cur * p_cur - D * q_cur * q_cur == 1);
    return PellFundamental{D, p_cur, q_cur, period};
}

PellSolution pell_nth(const PellFundamental& fund, unsigned n) {
    if (n < 1) throw std::invalid_argument("pell_nth: n must be >= 1");
    // binary exponentiation in Z[sqrt(D)]
    Int ru = 1, rv = 0;
    Int bu = fund.u1, bv = fund.v1;
    unsigned e = n;
    while (e) {
        if (e & 1) {
            Int nu = ru * bu + fund.D * rv * bv;
            Int nv = ru * bv + rv * bu;
            ru = nu;
            rv = nv;
        }
        e >>= 1;
        if (e) {
            Int nu = bu * bu + fund.D * bv * bv;
            Int nv = 2 * bu * bv;
            bu = nu;
            bv = nv;
        }
    }
    return PellSolution{fund.D, ru, rv, n};
}

bool is_pell_solution(const Int& D, const Int& u, const Int& v) {
    return u * u - D * v * v == 1;
}

}  // namespace rnagell
