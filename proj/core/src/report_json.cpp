#include "rnagell/pipeline.hpp"

#include <json.hpp>

namespace rnagell {

namespace {

using nlohmann::json;

json j_int(const Int& v) { return v.get_str(); }
json j_rat(const Rat& v) { return v.get_str(); }

json j_elimination(const EliminationVerdict& e) {
    json out;
    out["outcome"] = outcome_name(e.outcome);
    out["d"] = j_int(e.D);
    out["q"] = j_int(e.q);
    out["cofactor"] = j_int(e.cofactor);
    out["h_narrow"] = e.counts.h_narrow;
    out["h_wide"] = e.counts.h_wide;
    out["allowed_z"] = e.allowed_Z;
    out["searched"] = json::array();
    for (const auto& s : e.search.searched)
        out["searched"].push_back({{"z", s.Z}, {"bound_floor", j_int(s.bound_floor)}});
    if (e.search.least) {
        const auto& l = *e.search.least;
        out["least"] = {{"x1", j_int(l.X1)}, {"y1", j_int(l.Y1)}, {"z1", l.Z1}};
        out["t"] = e.t;
    } else {
        out["least"] = nullptr;
    }
    out["moduli_tried"] = json::array();
    for (const auto& m : e.moduli_tried) out["moduli_tried"].push_back(j_int(m));
    if (e.witness) {
        out["witness"] = {{"modulus", j_int(e.witness->modulus)},
                          {"t", e.witness->t},
                          {"g_mod_plus", j_int(e.witness->g_mod_plus)},
                          {"g_mod_minus", j_int(e.witness->g_mod_minus)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json j_report(const CaseReport& r) {
    json out;
    out["k"] = j_int(r.k);
    out["d"] = j_int(r.d);
    out["status"] = status_name(r.status);
    out["conductor"] = r.conductor ? j_int(*r.conductor) : json(nullptr);
    out["triples"] = json::array();
    for (const auto& t : r.triples) {
        json jt{{"i", t.i}, {"j", t.j}, {"verdict", t.verdict}};
        if (!t.points.empty()) {
            jt["points"] = json::array();
            for (const auto& p : t.points) jt["points"].push_back({j_rat(p.U), j_rat(p.V)});
        }
        if (t.elimination) jt["elimination"] = j_elimination(*t.elimination);
        out["triples"].push_back(std::move(jt));
    }
    out["brute_force"] = {{"y_max", r.window.y_max},
                          {"z_max", r.window.z_max},
                          {"solutions", json::array()}};
    for (const auto& s : r.solutions)
        out["brute_force"]["solutions"].push_back({j_int(s.x), s.y, s.z});
    json notes = r.notes;
    for (const auto& p : r.problems) notes.push_back("PROBLEM: " + p);
    out["notes"] = std::move(notes);
    return out;
}

}  // namespace

std::string audit_to_json(const AuditResult& result) {
    json out;
    out["version"] = result.version;
    json params;
    params["lo"] = j_int(result.params.lo);
    params["hi"] = j_int(result.params.hi);
    params["y_max"] = result.params.window.y_max;
    params["z_max"] = result.params.window.z_max;
    params["search_max_denom_exp"] = result.params.search_max_denom_exp;
    params["search_max_numerator"] = j_int(result.params.search_max_numerator);
    params["fixtures"] = json::array();
    for (const auto& f : result.params.fixtures) params["fixtures"].push_back(f.label);
    params["class_number_convention"] = ClassCount::convention();
    params["conventions"] = json::array({
        "class numbers carry both the cycle count (narrow) and the negation-identified "
        "count (wide); the wide count matches h(4*79) = 3 and is the selected h",
        "elimination exponents are the divisors of max(h_narrow, h_wide) meeting the "
        "divisors of i: a superset search can only weaken, never force, a verdict",
        "the case-(v) valuation check reads ord_2(B*b^n)",
        "window bounds are exact integer floors, rounded outward where a bracket is needed",
    });
    out["parameters"] = std::move(params);
    out["reports"] = json::array();
    for (const auto& r : result.reports) out["reports"].push_back(j_report(r));
    return out.dump(2);
}

}  // namespace rnagell
