#pragma once

// Exact rational arithmetic for continued-fraction convergents. Used to
// evaluate floor(l * alpha) for the slope alpha of a Sturmian word without
// any floating point: consecutive convergents bracket alpha, so the floor
// is certified whenever both bracket endpoints give the same value.

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitwords/word.hpp"

namespace orbitwords {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // > 0
};

inline std::int64_t floor_mul(std::int64_t l, Rational r) {
    __int128 p = static_cast<__int128>(l) * r.num;
    __int128 q = r.den;
    __int128 fl = p / q;
    if (p % q != 0 && (p < 0) != (q < 0)) fl -= 1;
    return static_cast<std::int64_t>(fl);
}

/// Open interval (lo, hi) certain to contain every irrational continuation
/// of the continued fraction [0; b1, b2, ..., bm].
struct CfBounds {
    Rational lo, hi;
};

/// Convergents of [0; b1, b2, ...]. Any infinite continuation of the
/// expansion lies strictly between the last two convergents.
inline CfBounds cf_bounds(const std::vector<int>& partial_quotients) {
    if (partial_quotients.size() < 2) {
        throw std::invalid_argument("need at least two partial quotients to bracket the value");
    }
    std::int64_t pm1 = 1, qm1 = 0;  // p_{-1}/q_{-1}
    std::int64_t p0 = 0, q0 = 1;    // p_0/q_0 for b0 = 0
    for (int b : partial_quotients) {
        if (b < 1) throw std::invalid_argument("partial quotients must be >= 1");
        if (p0 > (std::int64_t{1} << 60) / (b + 1) || q0 > (std::int64_t{1} << 60) / (b + 1)) {
            throw BudgetError("continued-fraction convergents overflow 64-bit range");
        }
        std::int64_t p1 = std::int64_t{b} * p0 + pm1;
        std::int64_t q1 = std::int64_t{b} * q0 + qm1;
        pm1 = p0; qm1 = q0;
        p0 = p1; q0 = q1;
    }
    Rational a{pm1, qm1}, b{p0, q0};
    // Consecutive convergents alternate sides of the limit.
    __int128 cross = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    return cross < 0 ? CfBounds{a, b} : CfBounds{b, a};
}

/// floor(l * alpha) when certified by the bracket, nullopt when the two
/// endpoints disagree (caller should supply more quotients).
inline std::optional<std::int64_t> certified_floor(std::int64_t l, const CfBounds& bounds) {
    std::int64_t flo = floor_mul(l, bounds.lo);
    std::int64_t fhi = floor_mul(l, bounds.hi);
    if (flo != fhi) return std::nullopt;
    // Exclude the endpoint case l*lo or l*hi exactly an integer straddled by alpha.
    return flo;
}

}  // namespace orbitwords
