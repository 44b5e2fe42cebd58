#pragma once

// Detection of (G x H_l)-r-th powers: blocks x_1...x_r of equal length n
// where every pair of blocks is related by some allowed (g, h). The scan
// enumerates (start, n) with an early-exit check per candidate; symbolic
// position families only (Generated is fixed-length, served by same_orbit).

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitwords/action.hpp"
#include "orbitwords/factors.hpp"
#include "orbitwords/generator.hpp"

namespace orbitwords {

enum class ElementFilter { All, Specific, NontrivialOnly };

struct PowerQuery {
    int r = 2;
    AlphabetGroup group;
    PositionFamilyKind family = PositionFamilyKind::Trivial;
    ElementFilter filter = ElementFilter::All;
    std::optional<AlphabetPerm> specific;  // filter == Specific
    std::size_t n_min = 1;
    std::optional<std::size_t> n_max;      // nullopt = unbounded within word

    static PowerQuery square(Alphabet a, std::size_t n_min = 1) {
        return {2, AlphabetGroup::trivial(a), PositionFamilyKind::Trivial, ElementFilter::All, {}, n_min, {}};
    }
    static PowerQuery caesar_square(Alphabet a, std::size_t n_min = 1) {
        return {2, AlphabetGroup::cyclic(a), PositionFamilyKind::Trivial, ElementFilter::All, {}, n_min, {}};
    }
    static PowerQuery abelian_square(Alphabet a, std::size_t n_min = 1) {
        return {2, AlphabetGroup::trivial(a), PositionFamilyKind::FullSymmetric, ElementFilter::All, {}, n_min, {}};
    }
    static PowerQuery reflection_square(Alphabet a, std::size_t n_min = 1) {
        return {2, AlphabetGroup::trivial(a), PositionFamilyKind::Reversal, ElementFilter::All, {}, n_min, {}};
    }
    static PowerQuery rotation_square(Alphabet a, std::size_t n_min = 1) {
        return {2, AlphabetGroup::trivial(a), PositionFamilyKind::Rotation, ElementFilter::All, {}, n_min, {}};
    }
    static PowerQuery first_last_square(Alphabet a, ElementFilter f, std::size_t n_min = 1) {
        return {2, AlphabetGroup::trivial(a), PositionFamilyKind::FirstLastSwap, f, {}, n_min, {}};
    }
};

/// How the position part of a witness acted.
enum class HWitness { Identity, Reverse, FirstLastSwap, RotationShift, Abelian };

inline std::string h_witness_name(HWitness h) {
    switch (h) {
        case HWitness::Identity: return "id";
        case HWitness::Reverse: return "reverse";
        case HWitness::FirstLastSwap: return "first-last";
        case HWitness::RotationShift: return "rotation";
        case HWitness::Abelian: return "abelian";
    }
    return "?";
}

struct PairWitness {
    int i = 0;  // block indices, i < j
    int j = 1;
    AlphabetPerm g;
    HWitness h = HWitness::Identity;
    std::size_t shift = 0;  // RotationShift only
};

struct PowerOccurrence {
    std::size_t start = 0;      // position of x_1 in the word
    std::size_t block_len = 0;  // n
    int r = 2;
    PositionFamilyKind family = PositionFamilyKind::Trivial;
    std::vector<PairWitness> witnesses;  // one per block pair
};

namespace detail {

struct BlockChecker {
    const PowerQuery& q;
    std::span<const Letter> text;

    bool allowed(const AlphabetPerm& g, bool h_trivial) const {
        switch (q.filter) {
            case ElementFilter::All: return true;
            case ElementFilter::Specific: return q.specific && g == *q.specific;
            case ElementFilter::NontrivialOnly: return !(g.is_identity() && h_trivial);
        }
        return false;
    }

    /// Try to relate block x (at xi) to block y (at yj), both length n.
    std::optional<PairWitness> relate(std::size_t xi, std::size_t yj, std::size_t n) const {
        const Letter* x = text.data() + xi;
        const Letter* y = text.data() + yj;
        for (const AlphabetPerm& g : q.group.elements()) {
            if (q.filter == ElementFilter::Specific && q.specific && !(g == *q.specific)) continue;
            switch (q.family) {
                case PositionFamilyKind::Trivial: {
                    if (!allowed(g, true)) break;
                    bool ok = true;
                    for (std::size_t t = 0; t < n; ++t) {
                        if (g(x[t]) != y[t]) { ok = false; break; }
                    }
                    if (ok) return PairWitness{0, 0, g, HWitness::Identity, 0};
                    break;
                }
                case PositionFamilyKind::FullSymmetric: {
                    std::vector<int> cx(q.group.alphabet().size(), 0), cy(q.group.alphabet().size(), 0);
                    for (std::size_t t = 0; t < n; ++t) {
                        ++cx[g(x[t])];
                        ++cy[y[t]];
                    }
                    if (cx != cy) break;
                    if (q.filter == ElementFilter::NontrivialOnly && g.is_identity()) {
                        // Need a nontrivial h with h.(x) = y: impossible only
                        // when x == y with all letters distinct.
                        bool equal = std::equal(x, x + n, y);
                        bool repeats = false;
                        for (int c : cx) repeats = repeats || c > 1;
                        if (equal && !repeats) break;
                    }
                    return PairWitness{0, 0, g, HWitness::Abelian, 0};
                }
                case PositionFamilyKind::Rotation: {
                    // y must be some rotation of g.x; with the convention
                    // (h.w)[h(i)] = w[i] and h the shift-by-s map, the
                    // rotated word starts with the last s letters of g.x.
                    for (std::size_t s = 0; s < n; ++s) {
                        if (!allowed(g, s == 0)) continue;
                        bool ok = true;
                        for (std::size_t t = 0; t < n; ++t) {
                            if (g(x[(n - s + t) % n]) != y[t]) { ok = false; break; }
                        }
                        if (ok) return PairWitness{0, 0, g, s == 0 ? HWitness::Identity : HWitness::RotationShift, s};
                    }
                    break;
                }
                case PositionFamilyKind::Reversal: {
                    if (allowed(g, true)) {
                        bool ok = true;
                        for (std::size_t t = 0; t < n; ++t) {
                            if (g(x[t]) != y[t]) { ok = false; break; }
                        }
                        if (ok) return PairWitness{0, 0, g, HWitness::Identity, 0};
                    }
                    if (allowed(g, n <= 1)) {
                        bool ok = true;
                        for (std::size_t t = 0; t < n; ++t) {
                            if (g(x[n - 1 - t]) != y[t]) { ok = false; break; }
                        }
                        if (ok && !(q.filter == ElementFilter::NontrivialOnly && n <= 1 && g.is_identity())) {
                            return PairWitness{0, 0, g, HWitness::Reverse, 0};
                        }
                    }
                    break;
                }
                case PositionFamilyKind::FirstLastSwap: {
                    if (allowed(g, true)) {
                        bool ok = true;
                        for (std::size_t t = 0; t < n; ++t) {
                            if (g(x[t]) != y[t]) { ok = false; break; }
                        }
                        if (ok) return PairWitness{0, 0, g, HWitness::Identity, 0};
                    }
                    {
                        if (q.filter == ElementFilter::NontrivialOnly && n <= 1 && g.is_identity()) break;
                        bool ok = true;
                        for (std::size_t t = 0; t < n; ++t) {
                            std::size_t src = t == 0 ? n - 1 : (t == n - 1 ? 0 : t);
                            if (g(x[src]) != y[t]) { ok = false; break; }
                        }
                        if (ok) return PairWitness{0, 0, g, HWitness::FirstLastSwap, 0};
                    }
                    break;
                }
                default:
                    throw std::invalid_argument("find_powers supports symbolic position families only");
            }
        }
        return std::nullopt;
    }

    /// All-pairs check for the r blocks starting at `start`.
    std::optional<PowerOccurrence> check(std::size_t start, std::size_t n) const {
        PowerOccurrence occ;
        occ.start = start;
        occ.block_len = n;
        occ.r = q.r;
        occ.family = q.family;
        for (int i = 0; i < q.r; ++i) {
            for (int j = i + 1; j < q.r; ++j) {
                auto w = relate(start + static_cast<std::size_t>(i) * n,
                                start + static_cast<std::size_t>(j) * n, n);
                if (!w) return std::nullopt;
                w->i = i;
                w->j = j;
                occ.witnesses.push_back(*w);
            }
        }
        return occ;
    }
};

}  // namespace detail

/// All occurrences, in ascending (start, n) order.
inline std::vector<PowerOccurrence> find_powers(const FiniteWord& w, const PowerQuery& q) {
    if (q.r < 2) throw std::invalid_argument("power exponent r must be >= 2");
    if (q.n_min < 1) throw std::invalid_argument("n_min must be >= 1");
    if (w.alphabet() != q.group.alphabet()) throw std::invalid_argument("alphabet mismatch in find_powers");
    std::vector<PowerOccurrence> out;
    detail::BlockChecker checker{q, w.span()};
    const std::size_t len = w.size();
    const std::size_t rr = static_cast<std::size_t>(q.r);
    for (std::size_t start = 0; start + rr * q.n_min <= len; ++start) {
        std::size_t hi = (len - start) / rr;
        if (q.n_max) hi = std::min(hi, *q.n_max);
        for (std::size_t n = q.n_min; n <= hi; ++n) {
            if (auto occ = checker.check(start, n)) out.push_back(std::move(*occ));
        }
    }
    return out;
}

/// Re-applies each recorded witness; true when every pair checks out.
inline bool reverify(const FiniteWord& w, const PowerOccurrence& occ) {
    const auto& s = w.letters();
    for (const PairWitness& pw : occ.witnesses) {
        std::size_t xi = occ.start + static_cast<std::size_t>(pw.i) * occ.block_len;
        std::size_t yj = occ.start + static_cast<std::size_t>(pw.j) * occ.block_len;
        if (yj + occ.block_len > w.size()) return false;
        std::size_t n = occ.block_len;
        auto gx = [&](std::size_t t) { return pw.g(s[xi + t]); };
        bool ok = true;
        switch (pw.h) {
            case HWitness::Identity:
                for (std::size_t t = 0; t < n && ok; ++t) ok = gx(t) == s[yj + t];
                break;
            case HWitness::Reverse:
                for (std::size_t t = 0; t < n && ok; ++t) ok = gx(n - 1 - t) == s[yj + t];
                break;
            case HWitness::FirstLastSwap:
                for (std::size_t t = 0; t < n && ok; ++t) {
                    std::size_t src = t == 0 ? n - 1 : (t == n - 1 ? 0 : t);
                    ok = gx(src) == s[yj + t];
                }
                break;
            case HWitness::RotationShift:
                for (std::size_t t = 0; t < n && ok; ++t) ok = gx((n - pw.shift + t) % n) == s[yj + t];
                break;
            case HWitness::Abelian: {
                std::vector<int> cx(w.alphabet().size(), 0), cy(w.alphabet().size(), 0);
                for (std::size_t t = 0; t < n; ++t) {
                    ++cx[gx(t)];
                    ++cy[s[yj + t]];
                }
                ok = cx == cy;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

struct AvoidanceReport {
    bool clean = false;
    std::optional<PowerOccurrence> first_violation;
    std::size_t prefix_len = 0;
};

/// Scans prefix(gen, prefix_len) and stops at the first occurrence.
inline AvoidanceReport verify_avoidance(const GeneratorSpec& gen, const PowerQuery& q, std::size_t prefix_len,
                                        const PrefixOptions& opts = {}) {
    FiniteWord w = prefix(gen, prefix_len, opts);
    detail::BlockChecker checker{q, w.span()};
    const std::size_t rr = static_cast<std::size_t>(q.r);
    for (std::size_t start = 0; start + rr * q.n_min <= w.size(); ++start) {
        std::size_t hi = (w.size() - start) / rr;
        if (q.n_max) hi = std::min(hi, *q.n_max);
        for (std::size_t n = q.n_min; n <= hi; ++n) {
            if (auto occ = checker.check(start, n)) {
                return {false, std::move(*occ), prefix_len};
            }
        }
    }
    return {true, std::nullopt, prefix_len};
}

/// Half-lengths n for which a Caesar square occurs in prefix(gen, prefix_len).
inline std::set<std::size_t> caesar_spectrum(const GeneratorSpec& gen, std::size_t prefix_len,
                                             std::optional<std::size_t> n_max = std::nullopt,
                                             const PrefixOptions& opts = {}) {
    if (prefix_len < 2) throw std::invalid_argument("caesar_spectrum needs prefix_len >= 2");
    FiniteWord w = prefix(gen, prefix_len, opts);
    PowerQuery q = PowerQuery::caesar_square(gen.alphabet());
    detail::BlockChecker checker{q, w.span()};
    std::set<std::size_t> found;
    std::size_t hi = n_max ? std::min(*n_max, w.size() / 2) : w.size() / 2;
    for (std::size_t n = 1; n <= hi; ++n) {
        for (std::size_t start = 0; start + 2 * n <= w.size(); ++start) {
            if (checker.check(start, n)) {
                found.insert(n);
                break;
            }
        }
    }
    return found;
}

/// Half-lengths n <= n_max admitting a square whose second block is the
/// g-image of the first, scanning a prefix grown adaptively (at least
/// 8 * n_max, doubling to prefix_cap while any n is still unwitnessed).
inline std::set<std::size_t> s3_square_half_lengths(const GeneratorSpec& gen, const AlphabetPerm& g,
                                                    std::size_t n_max,
                                                    std::size_t prefix_cap = std::size_t{1} << 20,
                                                    const PrefixOptions& opts = {}) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::size_t plen = std::max<std::size_t>(8 * n_max, 4096);
    plen = std::min(plen, prefix_cap);
    if (plen < 2 * n_max) throw BudgetError("prefix cap too small for requested n_max");
    std::set<std::size_t> found;
    PrefixCache cache(gen, opts);
    while (true) {
        std::span<const Letter> w = cache.ensure(plen);
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (found.count(n)) continue;
            for (std::size_t start = 0; start + 2 * n <= w.size(); ++start) {
                bool ok = true;
                for (std::size_t t = 0; t < n; ++t) {
                    if (g(w[start + t]) != w[start + n + t]) { ok = false; break; }
                }
                if (ok) {
                    found.insert(n);
                    break;
                }
            }
        }
        if (found.size() == n_max || plen >= prefix_cap) break;
        plen = std::min(prefix_cap, plen * 2);
    }
    return found;
}

}  // namespace orbitwords
