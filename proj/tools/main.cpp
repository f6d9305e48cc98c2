// Command-line audit tool for x^2 + (2k-1)^y = k^z.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rnagell/pipeline.hpp"

using namespace rnagell;

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: " + s);
    }
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not a rational (use NUM or NUM/DEN): " + s);
    }
}

void print_elimination(const EliminationVerdict& v) {
    std::printf("triple (%d,%d,%s): D = %s, cofactor = %s, q = %s\n", v.i, v.j,
                v.k.get_str().c_str(), v.D.get_str().c_str(), v.cofactor.get_str().c_str(),
                v.q.get_str().c_str());
    std::printf("  h(4D): narrow = %u, wide = %u (convention: %s)\n", v.counts.h_narrow,
                v.counts.h_wide, ClassCount::convention());
    std::printf("  allowed Z:");
    for (unsigned z : v.allowed_Z) std::printf(" %u", z);
    std::printf("\n");
    for (const auto& s : v.search.searched)
        std::printf("  Z = %u scanned up to X + Y*sqrt(D) <= %s\n", s.Z,
                    s.bound_floor.get_str().c_str());
    if (v.search.least) {
        const auto& l = *v.search.least;
        std::printf("  least solution: (X1, Y1, Z1) = (%s, %s, %u), t = %u\n",
                    l.X1.get_str().c_str(), l.Y1.get_str().c_str(), l.Z1, v.t);
        std::printf("  moduli tried:");
        for (const auto& m : v.moduli_tried) std::printf(" %s", m.get_str().c_str());
        if (v.moduli_tried.empty()) std::printf(" (none: gcd(rad(v1), rad(k)) = 1)");
        std::printf("\n");
        if (v.witness)
            std::printf("  contradiction mod %s: g = %s, -g = %s (both nonzero)\n",
                        v.witness->modulus.get_str().c_str(),
                        v.witness->g_mod_plus.get_str().c_str(),
                        v.witness->g_mod_minus.get_str().c_str());
    }
    std::printf("verdict: %s\n", outcome_name(v.outcome));
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic audit of x^2 + (2k-1)^y = k^z"};
    app.require_subcommand(1);

    // audit
    auto* audit = app.add_subcommand("audit", "run the per-k audit over a range");
    std::string lo = "30", hi = "724";
    unsigned ymax = 11, zmax = 11;
    std::string fixtures_path, json_path;
    unsigned sdepth = 2;
    std::string snum = "10000000";
    audit->add_option("--lo", lo, "lower bound, exclusive")->capture_default_str();
    audit->add_option("--hi", hi, "upper bound, exclusive")->capture_default_str();
    audit->add_option("--ymax", ymax, "brute-force exponent bound for y")->capture_default_str();
    audit->add_option("--zmax", zmax, "brute-force exponent bound for z")->capture_default_str();
    audit->add_option("--fixtures", fixtures_path, "curve table file (label conductor a1..a6)");
    audit->add_option("--json", json_path, "write the JSON report here");
    audit->add_option("--sdepth", sdepth, "S-point search: max denominator exponent")
        ->capture_default_str();
    audit->add_option("--snum", snum, "S-point search: max |numerator|")->capture_default_str();

    // pell
    auto* pell = app.add_subcommand("pell", "least solution of u^2 - D v^2 = 1");
    std::string pell_d;
    pell->add_option("--d", pell_d, "nonsquare D >= 2")->required();

    // classnum
    auto* classnum = app.add_subcommand("classnum", "class number of forms of discriminant 4D");
    std::string cn_d;
    classnum->add_option("--d", cn_d, "nonsquare D >= 2")->required();

    // antipell
    auto* antipell = app.add_subcommand("antipell", "least solution of X^2 - D Y^2 = (-q)^Z");
    std::string ap_d, ap_q;
    std::vector<unsigned> ap_z;
    antipell->add_option("--d", ap_d, "nonsquare D >= 2")->required();
    antipell->add_option("--q", ap_q, "odd prime power coprime to D")->required();
    antipell->add_option("--z", ap_z, "allowed exponents (default: divisors of h(4D))");

    // eliminate
    auto* eliminate = app.add_subcommand("eliminate", "least-solution elimination of one triple");
    int el_i = 5, el_j = 2;
    std::string el_k, el_d, el_cof;
    eliminate->add_option("--i", el_i, "exponent i (3 or 5)")->required();
    eliminate->add_option("--j", el_j, "residue j (0, 1 or 2)")->required();
    eliminate->add_option("--k", el_k, "the k of the triple")->required();
    eliminate->add_option("--d", el_d, "discriminant D with k = cofactor^2 D");
    eliminate->add_option("--cofactor", el_cof, "cofactor (with --d)");

    // conductor
    auto* conductor = app.add_subcommand("conductor", "rad(2k-1) rad(k)");
    std::string cond_k;
    conductor->add_option("--k", cond_k, "k >= 2")->required();

    // search
    auto* search = app.add_subcommand("search", "brute-force solutions in a window");
    std::string se_k;
    unsigned se_ymax = 11, se_zmax = 11;
    search->add_option("--k", se_k, "k >= 2")->required();
    search->add_option("--ymax", se_ymax, "y bound")->capture_default_str();
    search->add_option("--zmax", se_zmax, "z bound")->capture_default_str();

    // mordell-verify
    auto* mverify = app.add_subcommand("mordell-verify", "check a point on V^2 = U^3 - (2k-1)^i k^(2j)");
    int mv_i = 3, mv_j = 0;
    std::string mv_k, mv_u, mv_v;
    mverify->add_option("--i", mv_i, "exponent i (3 or 5)")->required();
    mverify->add_option("--j", mv_j, "residue j (0, 1 or 2)")->required();
    mverify->add_option("--k", mv_k, "k >= 2")->required();
    mverify->add_option("--u", mv_u, "U as NUM or NUM/DEN")->required();
    mverify->add_option("--v", mv_v, "V as NUM or NUM/DEN")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*pell) {
        auto f = pell_least(parse_int(pell_d));
        std::printf("D = %s: u1 = %s, v1 = %s (period %u)\n", f.D.get_str().c_str(),
                    f.u1.get_str().c_str(), f.v1.get_str().c_str(), f.period);
        return 0;
    }

    if (*classnum) {
        auto c = class_number_4D(parse_int(cn_d));
        std::printf("D = %s: h_narrow = %u (cycles), h_wide = %u (cycles mod negation)\n",
                    c.D.get_str().c_str(), c.h_narrow, c.h_wide);
        std::printf("h = %u (convention: %s)\n", c.h(), ClassCount::convention());
        return 0;
    }

    if (*antipell) {
        Int D = parse_int(ap_d), q = parse_int(ap_q);
        std::vector<unsigned> zs = ap_z;
        if (zs.empty()) zs = divisors(class_number_4D(D).h());
        auto res = antipell_search(D, q, zs);
        for (const auto& s : res.searched)
            std::printf("Z = %u: scanned X + Y*sqrt(D) <= %s\n", s.Z,
                        s.bound_floor.get_str().c_str());
        if (res.least) {
            std::printf("least solution: (X1, Y1, Z1) = (%s, %s, %u)\n",
                        res.least->X1.get_str().c_str(), res.least->Y1.get_str().c_str(),
                        res.least->Z1);
        } else {
            std::printf("no least solution for the allowed exponents\n");
        }
        return 0;
    }

    if (*eliminate) {
        Int k = parse_int(el_k);
        TripleParams params = default_triple_params(el_i, el_j, k);
        if (!el_d.empty()) {
            params.D = parse_int(el_d);
            params.cofactor = el_cof.empty() ? Int(1) : parse_int(el_cof);
        }
        auto v = eliminate_triple(el_i, el_j, k, params.D, params.cofactor);
        print_elimination(v);
        return 0;
    }

    if (*conductor) {
        std::printf("%s\n", conductor_rn(parse_int(cond_k)).get_str().c_str());
        return 0;
    }

    if (*search) {
        auto sols = brute_force(parse_int(se_k), SearchWindow{se_ymax, se_zmax});
        for (const auto& s : sols)
            std::printf("x = %s, y = %u, z = %u\n", s.x.get_str().c_str(), s.y, s.z);
        std::printf("%zu solution(s) with y <= %u, z <= %u\n", sols.size(), se_ymax, se_zmax);
        return 0;
    }

    if (*mverify) {
        auto curve = build_curve(mv_i, mv_j, parse_int(mv_k));
        Rat U = parse_rat(mv_u), V = parse_rat(mv_v);
        bool on = verify_point(curve, U, V);
        std::printf("curve: V^2 = U^3 - %s\n", Int(-curve.coeff).get_str().c_str());
        std::printf("point is %s\n", on ? "on the curve and S-integral" : "NOT a valid S-integral point");
        if (on) {
            auto sol = point_to_solution(curve, SPoint{U, V});
            if (sol)
                std::printf("inverts to x = %s, y = %u, z = %u\n", sol->x.get_str().c_str(),
                            sol->y, sol->z);
            else
                std::printf("does not invert to a positive solution\n");
        }
        return on ? 0 : 1;
    }

    if (*audit) {
        AuditParams params;
        params.lo = parse_int(lo);
        params.hi = parse_int(hi);
        params.window = SearchWindow{ymax, zmax};
        params.search_max_denom_exp = sdepth;
        params.search_max_numerator = parse_int(snum);
        if (!fixtures_path.empty()) params.fixtures = load_fixtures(fixtures_path);

        auto result = run_audit(params);
        for (const auto& r : result.reports) {
            std::printf("k = %s (2k-1 = %s): %s", r.k.get_str().c_str(), r.d.get_str().c_str(),
                        status_name(r.status));
            if (r.conductor) std::printf(", N = %s", r.conductor->get_str().c_str());
            std::printf("\n");
            for (const auto& t : r.triples)
                if (t.elimination || !t.points.empty())
                    std::printf("  (%d,%d): %s\n", t.i, t.j, t.verdict.c_str());
            std::printf("  brute force (y <= %u, z <= %u): %zu solution(s)\n", r.window.y_max,
                        r.window.z_max, r.solutions.size());
            for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
            for (const auto& p : r.problems) std::printf("  PROBLEM: %s\n", p.c_str());
        }
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) {
                std::fprintf(stderr, "cannot write %s\n", json_path.c_str());
                return 2;
            }
            out << audit_to_json(result) << "\n";
        }
        std::printf("%s\n", result.all_clear ? "all verdicts consistent"
                                             : "inconsistencies or unresolved verdicts present");
        return result.all_clear ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
}
