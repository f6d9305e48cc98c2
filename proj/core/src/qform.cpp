#include "rnagell/qform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace rnagell {

namespace {

// x < sqrt(disc), x may be negative
bool below_sqrt(const Int& x, const Int& disc) {
    if (x < 0) return true;
    return x * x < disc;
}

void validate_disc(const Int& disc) {
    if (disc <= 0) throw std::invalid_argument("discriminant must be positive");
    if (is_perfect_square(disc))
        throw std::invalid_argument("discriminant must not be a perfect square");
    Int r = disc % 4;
    if (r != 0 && r != 1)
        throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    if (disc > 100'000'000)
        throw BudgetExceeded("reduced_forms: discriminant beyond the enumeration budget");
}

std::tuple<long, long, long> key_of(const QuadForm& f) {
    return {f.a.get_si(), f.b.get_si(), f.c.get_si()};
}

}  // namespace

bool is_reduced(const QuadForm& f) {
    if (f.b <= 0 || !below_sqrt(f.b, f.disc)) return false;
    Int t = 2 * abs(f.a);
    // sqrt(disc) - b < t  <=>  disc < (t + b)^2
    if (!(f.disc < (t + f.b) * (t + f.b))) return false;
    // t < sqrt(disc) + b  <=>  t - b < sqrt(disc)
    return below_sqrt(t - f.b, f.disc);
}

bool is_primitive(const QuadForm& f) {
    Int g = gcd(gcd(f.a, f.b), f.c);
    return g == 1;
}

std::vector<QuadForm> reduced_forms(const Int& disc) {
    validate_disc(disc);
    std::vector<QuadForm> out;
    Int s = integer_sqrt(disc).first;
    for (Int b = (disc % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        if (!(b * b < disc)) break;
        Int prod4 = b * b - disc;  // = 4ac < 0
        Int prod = prod4 / 4;      // disc = 0,1 mod 4 and b matched in parity
        for (Int a = 1; a <= s + 1; ++a) {
            if (!mpz_divisible_p(prod.get_mpz_t(), a.get_mpz_t())) continue;
            Int c = prod / a;
            for (int sign : {1, -1}) {
                QuadForm f{sign * a, b, sign > 0 ? c : Int(-c), disc};
                if (is_reduced(f) && is_primitive(f)) out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadForm& x, const QuadForm& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

QuadForm reduction_step(const QuadForm& f) {
    Int t = 2 * abs(f.c);
    Int r = (-f.b) % t;
    if (r < 0) r += t;
    // lift into sqrt(disc) - 2|c| < r < sqrt(disc)
    while (below_sqrt(r + t, f.disc)) r += t;
    while (!below_sqrt(r, f.disc)) r -= t;
    Int cp = (r * r - f.disc) / (4 * f.c);
    return QuadForm{f.c, r, cp, f.disc};
}

std::vector<std::vector<QuadForm>> form_cycles(const Int& disc) {
    auto forms = reduced_forms(disc);
    std::set<std::tuple<long, long, long>> remaining;
    for (const auto& f : forms) remaining.insert(key_of(f));

    std::vector<std::vector<QuadForm>> cycles;
    for (const auto& f0 : forms) {
        if (!remaining.count(key_of(f0))) continue;
        std::vector<QuadForm> cyc;
        QuadForm f = f0;
        do {
            remaining.erase(key_of(f));
            cyc.push_back(f);
            f = reduction_step(f);
            if (cyc.size() > 100'000) throw std::logic_error("form cycle does not close");
        } while (!(f == f0));
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

ClassCount class_number_4D(const Int& D) {
    if (D < 2) throw std::invalid_argument("class_number_4D: D must be >= 2");
    if (is_perfect_square(D))
        throw std::invalid_argument("class_number_4D: D must not be a perfect square");
    Int disc = 4 * D;
    auto cycles = form_cycles(disc);

    std::map<std::tuple<long, long, long>, size_t> which;
    for (size_t i = 0; i < cycles.size(); ++i)
        for (const auto& f : cycles[i]) which[key_of(f)] = i;

    auto cycle_of = [&](QuadForm f) {
        for (int guard = 0; guard < 100'000; ++guard) {
            auto it = which.find(key_of(f));
            if (it != which.end()) return it->second;
            f = reduction_step(f);
        }
        throw std::logic_error("reduction did not reach a reduced form");
    };

    std::set<std::pair<size_t, size_t>> identified;
    for (size_t i = 0; i < cycles.size(); ++i) {
        const QuadForm& f = cycles[i][0];
        size_t j = cycle_of(QuadForm{-f.a, -f.b, -f.c, f.disc});
        identified.insert({std::min(i, j), std::max(i, j)});
    }

    ClassCount out;
    out.D = D;
    out.h_narrow = static_cast<unsigned>(cycles.size());
    out.h_wide = static_cast<unsigned>(identified.size());
    return out;
}

}  // namespace rnagell
