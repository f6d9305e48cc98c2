#include "rnagell/frey.hpp"

#include <fstream>
#include <sstream>

namespace rnagell {

namespace {

Int pow_int(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Int mod4(const Int& v) {
    Int r = v % 4;
    if (r < 0) r += 4;
    return r;
}

}  // namespace

FreyParams build_frey_params(const Int& k, unsigned z, const Int& x, unsigned n) {
    if (n < 7 || !is_prime(Int(n)))
        throw std::invalid_argument("build_frey_params: n must be a prime >= 7");
    if (z % 2 == 0 || z < n)
        throw std::invalid_argument("build_frey_params: z must be odd and >= n");
    if (k < 2) throw std::invalid_argument("build_frey_params: k must be >= 2");
    if (x < 1 || mpz_even_p(x.get_mpz_t()))
        throw std::invalid_argument("build_frey_params: x must be a positive odd integer");

    auto split = power_free_split(factorize(k).pow(z), n);

    FreyParams p;
    p.n = n;
    p.A = -1;
    p.a = 2 * k - 1;
    p.B = split.f;
    p.b = split.g;
    p.C = 1;
    p.c = (mod4(x) == 1) ? x : Int(-x);
    p.k = k;
    p.z = z;
    p.x = x;

    if (gcd(p.A * p.a, p.B * p.b) != 1 || gcd(p.a, p.c) != 1 || gcd(p.B * p.b, p.c) != 1)
        throw std::invalid_argument("build_frey_params: Aa, Bb, Cc must be pairwise coprime");
    return p;
}

const char* case_name(SignatureCase c) {
    switch (c) {
        case SignatureCase::i: return "i";
        case SignatureCase::ii: return "ii";
        case SignatureCase::iii: return "iii";
        case SignatureCase::iv: return "iv";
        case SignatureCase::v: return "v";
    }
    return "?";
}

CaseTag classify_case(const FreyParams& p) {
    const Int two = 2;
    Int Bbn = p.B * pow_int(p.b, p.n);
    bool ab_odd = mpz_odd_p(p.a.get_mpz_t()) && mpz_odd_p(p.b.get_mpz_t());
    bool all_odd = ab_odd && mpz_odd_p(p.A.get_mpz_t()) && mpz_odd_p(p.B.get_mpz_t()) &&
                   mpz_odd_p(p.C.get_mpz_t());

    // (i) abABC odd and b = -BC (mod 4)
    if (all_odd && mod4(p.b) == mod4(-p.B * p.C)) return CaseTag{SignatureCase::i, 5, 6};

    unsigned ord2B = (p.B == 0) ? 0 : ord_p(p.B, two);
    unsigned ord2C = (p.C == 0) ? 0 : ord_p(p.C, two);

    // (ii) ab odd and ord_2(B) = 1 or ord_2(C) = 1
    if (ab_odd && (ord2B == 1 || ord2C == 1)) return CaseTag{SignatureCase::ii, 6, 6};

    // (iii) ab odd, ord_2(B) = 2 and C = -bB/4 (mod 4)
    if (ab_odd && ord2B == 2) {
        Int B4 = p.B / 4;
        if (mod4(p.C) == mod4(-p.b * B4)) {
            int alpha = (mod4(p.b) == mod4(-p.B * p.C / 4)) ? 1 : 2;
            return CaseTag{SignatureCase::iii, alpha, 0};
        }
    }

    // (iv) ab odd, ord_2(B) in {3,4,5} and c = C (mod 4)
    if (ab_odd && ord2B >= 3 && ord2B <= 5 && mod4(p.c) == mod4(p.C)) {
        int alpha = (ord2B == 3) ? 4 : 2;
        return CaseTag{SignatureCase::iv, alpha, 0};
    }

    // (v) ord_2(B b^n) >= 6 and c = C (mod 4)
    unsigned ord2Bbn = ord_p(Bbn, two);
    if (ord2Bbn >= 6 && mod4(p.c) == mod4(p.C)) {
        int alpha = (ord2Bbn == 6) ? -1 : 0;
        return CaseTag{SignatureCase::v, alpha, -12};
    }

    throw std::domain_error("classify_case: no signature-(n,n,2) case applies");
}

bool lemma35_check(const Int& k, unsigned z, unsigned n) {
    if (mpz_divisible_ui_p(k.get_mpz_t(), 4) == 0)
        throw std::invalid_argument("lemma35_check: 4 must divide k");
    if (n < 7 || !is_prime(Int(n)))
        throw std::invalid_argument("lemma35_check: n must be a prime >= 7");
    if (z % 2 == 0 || z < n)
        throw std::invalid_argument("lemma35_check: z must be odd and >= n");
    auto split = power_free_split(factorize(k).pow(z), n);
    unsigned ord2 = (mpz_even_p(split.f.get_mpz_t()) ? ord_p(split.f, 2) : 0) +
                    n * (mpz_even_p(split.g.get_mpz_t()) ? ord_p(split.g, 2) : 0);
    return ord2 >= 6;
}

Rat discriminant(const FreyParams& p, const CaseTag& tag) {
    Int core = p.C * p.C * p.C * p.B * p.B * p.A * pow_int(p.a * p.b * p.b, p.n);
    Rat out(core);
    if (tag.delta >= 0) {
        mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), tag.delta);
    } else {
        mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), -tag.delta);
    }
    out.canonicalize();
    return out;
}

Int conductor_rn(const Int& k) {
    if (k < 2) throw std::invalid_argument("conductor_rn: k must be >= 2");
    return radical(2 * k - 1) * radical(k);
}

Int CurveFixture::weierstrass_disc() const {
    const Int &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    Int b2 = a1 * a1 + 4 * a2;
    Int b4 = 2 * a4 + a1 * a3;
    Int b6 = a3 * a3 + 4 * a6;
    Int b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

const std::vector<CurveFixture>& default_fixtures() {
    static const std::vector<CurveFixture> fixtures = {
        CurveFixture{"2298h1", 2298, {1, 0, 0, 6, 0}},
        CurveFixture{"12790b1", 12790, {1, 0, 0, 20, 0}},
    };
    return fixtures;
}

std::vector<CurveFixture> load_fixtures(std::istream& in) {
    std::vector<CurveFixture> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label)) continue;
        if (label[0] == '#') continue;
        CurveFixture f;
        f.label = label;
        std::string tok;
        if (!(ls >> tok)) throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": missing conductor");
        f.conductor = Int(tok);
        for (auto& ai : f.a) {
            if (!(ls >> tok))
                throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": expected five a-invariants");
            ai = Int(tok);
        }
        if (f.conductor < 1)
            throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": conductor must be positive");
        if (f.weierstrass_disc() == 0)
            throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": singular curve");
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<CurveFixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    return load_fixtures(in);
}

FixtureMatch match_fixture(const Int& N, const std::vector<CurveFixture>& fixtures,
                           const Int& k) {
    FixtureMatch out;
    out.conductor = N;
    out.k = k;
    for (const auto& fx : fixtures) {
        if (fx.conductor != N) continue;
        out.any_match = true;
        FixtureCheck chk;
        chk.label = fx.label;
        chk.conductor = fx.conductor;
        chk.shape_ok = (fx.a[0] == 1 && fx.a[2] == 0 && fx.a[4] == 0);
        if (!chk.shape_ok) {
            chk.detail = "quintuple is not of the shape [1, a2, 0, a4, 0]";
            out.checks.push_back(std::move(chk));
            continue;
        }
        chk.x_implied = 4 * fx.a[1] + 1;   // a2 = (x-1)/4
        Int target = 64 * fx.a[3];         // a4 = k^z / 64
        // find odd z >= 9 with k^z = target
        Int pw = k;
        unsigned z = 1;
        while (pw < target) {
            pw *= k;
            ++z;
        }
        if (pw == target && z % 2 == 1 && z >= 9) chk.z_solution = z;
        if (chk.z_solution) {
            chk.compatible = true;
            chk.detail = "implies x = " + chk.x_implied.get_str() + ", z = " +
                         std::to_string(*chk.z_solution);
            out.any_compatible = true;
        } else {
            chk.compatible = false;
            chk.detail = "k^z = " + target.get_str() + " has no admissible integer z";
        }
        out.checks.push_back(std::move(chk));
    }
    return out;
}

}  // namespace rnagell
