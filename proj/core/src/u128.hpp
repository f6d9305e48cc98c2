#pragma once

// Internal 128-bit helpers for the hot search loops. Public results are
// always re-verified with exact mpz arithmetic at the call sites.

#include <cmath>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace rnagell::detail {

using u128 = unsigned __int128;

inline bool fits_u128(const mpz_class& v) {
    return mpz_sgn(v.get_mpz_t()) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 126;
}

inline u128 to_u128(const mpz_class& v) {
    mpz_class hi = v >> 64;
    mpz_class lo = v - (hi << 64);
    return (u128(hi.get_ui()) << 64) | u128(lo.get_ui());
}

inline mpz_class from_u128(u128 v) {
    mpz_class hi(static_cast<unsigned long>(v >> 64));
    mpz_class out = hi << 64;
    out += static_cast<unsigned long>(v & ~0ULL);
    return out;
}

inline uint64_t isqrt_u128(u128 x) {
    if (x == 0) return 0;
    auto r = static_cast<uint64_t>(sqrtl(static_cast<long double>(x)));
    while (r > 0 && u128(r) * r > x) --r;
    while (u128(r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Quadratic-residue prefilter followed by an exact isqrt; the tables reject
// well over 99% of non-squares before any sqrt is taken. The second stage
// works modulo 45045 = 9*5*7*11*13 through a single 64-bit fold, since
// 128-bit division lowers to a libcall.
struct SquareFilter {
    static constexpr uint64_t kMod = 45045;
    bool mod256[256] = {};
    std::vector<uint8_t> mod45045;
    uint64_t two64_mod;  // 2^64 mod kMod

    SquareFilter() : mod45045(kMod, 0) {
        for (int i = 0; i < 256; ++i) mod256[(i * i) & 255] = true;
        for (uint64_t i = 0; i < kMod; ++i) mod45045[(i * i) % kMod] = 1;
        uint64_t r32 = (uint64_t(1) << 32) % kMod;
        two64_mod = (r32 * r32) % kMod;
    }

    bool pass(u128 x) const {
        if (!mod256[static_cast<unsigned>(x & 255)]) return false;
        uint64_t hi = static_cast<uint64_t>(x >> 64);
        uint64_t lo = static_cast<uint64_t>(x);
        uint64_t m = ((hi % kMod) * two64_mod + lo % kMod) % kMod;
        return mod45045[m] != 0;
    }
};

inline bool is_square_u128(u128 x, uint64_t* root = nullptr) {
    static const SquareFilter filt;
    if (!filt.pass(x)) return false;
    uint64_t r = isqrt_u128(x);
    if (u128(r) * r != x) return false;
    if (root) *root = r;
    return true;
}

}  // namespace rnagell::detail
