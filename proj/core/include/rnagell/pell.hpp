#pragma once

#include "rnagell/arith.hpp"

namespace rnagell {

/// Least positive solution of u^2 - D v^2 = 1 together with the period
/// length of the continued fraction of sqrt(D).
struct PellFundamental {
    Int D;
    Int u1;
    Int v1;
    unsigned period = 0;
};

/// The n-th solution u_n + v_n sqrt(D) = (u1 + v1 sqrt(D))^n.
struct PellSolution {
    Int D;
    Int u;
    Int v;
    unsigned index = 0;
};

/// Continued-fraction solver. Exact integer (P, Q, a) recurrences only;
/// termination by the period boundary, never by float convergence.
/// Rejects D < 2 and perfect squares.
PellFundamental pell_least(const Int& D);

PellSolution pell_nth(const PellFundamental& fund, unsigned n);

bool is_pell_solution(const Int& D, const Int& u, const Int& v);

}  // namespace rnagell
