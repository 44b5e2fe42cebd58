#pragma once

// The extremal 1-count statistics of vtm: p[l] / q[l] are the minimum and
// maximum number of 1's over the length-l factors, computed either directly
// from factor sets or by the recurrence system
//   p[4l-1] = p[l] + l - 1          q[4l-1] = q[4l] = q[l] + l
//   p[4l]   = p[4l+1] = p[l] + l    q[4l+1] = q[4l+2] = q[l] + l + 1
//   p[4l+2] = p[l+1] + l
// seeded with p[1] = p[2] = 0, q[1] = q[2] = 1.

#include <string>
#include <vector>

#include "orbitwords/factors.hpp"
#include "orbitwords/generator.hpp"

namespace orbitwords {

struct PQTable {
    enum class Source { Direct, Recurrence };

    std::size_t lmax = 0;
    std::vector<long long> p;  // index 1..lmax; index 0 unused
    std::vector<long long> q;
    Source source = Source::Recurrence;

    /// 0 <= p[l] <= q[l] <= l, both nondecreasing.
    std::string validate() const {
        for (std::size_t l = 1; l <= lmax; ++l) {
            if (p[l] < 0 || p[l] > q[l] || q[l] > static_cast<long long>(l)) {
                return "order violated at l=" + std::to_string(l);
            }
            if (l >= 2 && (p[l] < p[l - 1] || q[l] < q[l - 1])) {
                return "monotonicity violated at l=" + std::to_string(l);
            }
        }
        return "";
    }
};

inline PQTable pq_direct(std::size_t lmax, StabilizationPolicy policy = {}) {
    if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
    PQTable t;
    t.lmax = lmax;
    t.source = PQTable::Source::Direct;
    t.p.assign(lmax + 1, 0);
    t.q.assign(lmax + 1, 0);
    GeneratorSpec vtm = builtin_vtm();
    PrefixCache cache(vtm);
    for (std::size_t l = 1; l <= lmax; ++l) {
        FactorSet fs = factors_of_length(vtm, l, policy, &cache);
        if (!fs.stabilized) {
            throw StabilizationError("factor set for l=" + std::to_string(l) + " did not stabilize");
        }
        long long mn = static_cast<long long>(l), mx = 0;
        for (const FiniteWord& u : fs.factors) {
            long long c = 0;
            for (Letter a : u.letters()) c += (a == 1);
            mn = std::min(mn, c);
            mx = std::max(mx, c);
        }
        t.p[l] = mn;
        t.q[l] = mx;
    }
    return t;
}

inline PQTable pq_recurrence(std::size_t lmax) {
    if (lmax < 1) throw std::invalid_argument("lmax must be >= 1");
    PQTable t;
    t.lmax = lmax;
    t.source = PQTable::Source::Recurrence;
    t.p.assign(lmax + 1, 0);
    t.q.assign(lmax + 1, 0);
    t.p[1] = 0;
    t.q[1] = 1;
    if (lmax >= 2) {
        t.p[2] = 0;
        t.q[2] = 1;
    }
    for (std::size_t m = 3; m <= lmax; ++m) {
        // Every m >= 3 falls in exactly one of the four residue cases with
        // inner index >= 1; assert the partition instead of trusting it.
        int matched = 0;
        if ((m + 1) % 4 == 0) {  // m = 4l - 1
            std::size_t l = (m + 1) / 4;
            t.p[m] = t.p[l] + static_cast<long long>(l) - 1;
            t.q[m] = t.q[l] + static_cast<long long>(l);
            ++matched;
        }
        if (m % 4 == 0) {  // m = 4l
            std::size_t l = m / 4;
            t.p[m] = t.p[l] + static_cast<long long>(l);
            t.q[m] = t.q[l] + static_cast<long long>(l);
            ++matched;
        }
        if (m % 4 == 1 && m >= 5) {  // m = 4l + 1
            std::size_t l = (m - 1) / 4;
            t.p[m] = t.p[l] + static_cast<long long>(l);
            t.q[m] = t.q[l] + static_cast<long long>(l) + 1;
            ++matched;
        }
        if (m % 4 == 2 && m >= 6) {  // m = 4l + 2
            std::size_t l = (m - 2) / 4;
            t.p[m] = t.p[l + 1] + static_cast<long long>(l);
            t.q[m] = t.q[l] + static_cast<long long>(l) + 1;
            ++matched;
        }
        if (matched != 1) {
            throw std::logic_error("recurrence case split does not partition at m=" + std::to_string(m));
        }
    }
    return t;
}

struct BoundsRow {
    std::size_t l = 0;
    long long p = 0;
    long long q = 0;
    bool p_ok = false;
    bool q_ok = false;
};

struct BoundsReport {
    std::size_t lmax = 0;
    bool pass = false;
    std::vector<BoundsRow> failures;
};

/// p[l] <= floor((l-1)/3) and q[l] >= floor(l/3) + 1, against the
/// recurrence table.
inline BoundsReport check_bounds(std::size_t lmax) {
    PQTable t = pq_recurrence(lmax);
    BoundsReport rep;
    rep.lmax = lmax;
    rep.pass = true;
    for (std::size_t l = 1; l <= lmax; ++l) {
        bool p_ok = t.p[l] <= static_cast<long long>((l - 1) / 3);
        bool q_ok = t.q[l] >= static_cast<long long>(l / 3) + 1;
        if (!p_ok || !q_ok) {
            rep.pass = false;
            rep.failures.push_back({l, t.p[l], t.q[l], p_ok, q_ok});
        }
    }
    return rep;
}

}  // namespace orbitwords
