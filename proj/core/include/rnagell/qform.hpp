#pragma once

#include <vector>

#include "rnagell/arith.hpp"

namespace rnagell {

/// Primitive indefinite binary quadratic form a x^2 + b xy + c y^2 of
/// positive nonsquare discriminant b^2 - 4ac.
struct QuadForm {
    Int a, b, c;
    Int disc;

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Reduced in the indefinite sense: 0 < b < sqrt(disc) and
/// sqrt(disc) - b < 2|a| < sqrt(disc) + b, all compared by exact squaring.
bool is_reduced(const QuadForm& f);

bool is_primitive(const QuadForm& f);

/// All reduced primitive forms of the given positive nonsquare discriminant.
std::vector<QuadForm> reduced_forms(const Int& disc);

/// The reduction-neighbor step rho(a,b,c) = (c, r, (r^2 - disc)/(4c)) with
/// r = -b (mod 2|c|) lifted into the window sqrt(disc) - 2|c| < r < sqrt(disc).
/// Maps reduced forms to reduced forms; iterating it reduces any form.
QuadForm reduction_step(const QuadForm& f);

/// Cycles of reduced forms under reduction_step (each cycle is one proper
/// equivalence class).
std::vector<std::vector<QuadForm>> form_cycles(const Int& disc);

/// Both class-number conventions for forms of discriminant 4D.
///
/// h_narrow counts the reduction cycles themselves (proper / SL2 classes).
/// h_wide additionally identifies each cycle with the cycle of the negated
/// form (-a,-b,-c); this is the count that agrees with the classical class
/// number tables for real quadratic orders (e.g. h(4*79) = 3) and is the
/// convention selected as h(). Always h_wide <= h_narrow <= 2*h_wide.
struct ClassCount {
    Int D;
    unsigned h_narrow;
    unsigned h_wide;

    unsigned h() const { return h_wide; }
    static const char* convention() { return "cycles_mod_negation"; }
};

ClassCount class_number_4D(const Int& D);

}  // namespace rnagell
