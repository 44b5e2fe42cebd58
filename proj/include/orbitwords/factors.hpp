#pragma once

// Enumeration of the length-l factors of a generated infinite word.
// Completeness over an infinite word cannot be decided from a prefix, so
// the enumeration doubles the prefix until the factor set is unchanged for
// two consecutive doublings and reports the heuristic outcome in
// `stabilized`; theorem-verification callers must insist on it.

#include <set>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orbitwords/generator.hpp"
#include "orbitwords/word.hpp"

namespace orbitwords {

using ParikhVector = std::vector<int>;

inline ParikhVector parikh(const FiniteWord& w) {
    ParikhVector counts(w.alphabet().size(), 0);
    for (Letter a : w.letters()) ++counts[a];
    return counts;
}

struct StabilizationPolicy {
    std::size_t initial_prefix = 0;              // 0 = max(4*l, 1024)
    std::size_t prefix_cap = std::size_t{1} << 22;
};

struct FactorSet {
    std::size_t length = 0;
    std::vector<FiniteWord> factors;  // sorted, distinct
    std::size_t prefix_used = 0;
    bool stabilized = false;

    bool contains(const FiniteWord& w) const {
        return std::binary_search(factors.begin(), factors.end(), w);
    }
};

namespace detail {

inline std::size_t count_distinct_windows(std::span<const Letter> text, std::size_t l,
                                          std::unordered_set<std::string_view>& seen) {
    seen.clear();
    if (text.size() < l || l == 0) return 0;
    const char* base = reinterpret_cast<const char*>(text.data());
    for (std::size_t j = 0; j + l <= text.size(); ++j) {
        seen.insert(std::string_view(base + j, l));
    }
    return seen.size();
}

}  // namespace detail

/// Sorted distinct length-l factors of a finite word.
inline std::vector<FiniteWord> factors_of_word(const FiniteWord& w, std::size_t l) {
    std::set<std::vector<Letter>> seen;
    if (l >= 1 && w.size() >= l) {
        for (std::size_t j = 0; j + l <= w.size(); ++j) {
            seen.insert(std::vector<Letter>(w.letters().begin() + j, w.letters().begin() + j + l));
        }
    }
    std::vector<FiniteWord> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.push_back(FiniteWord::trusted(w.alphabet(), std::vector<Letter>(v)));
    return out;
}

inline FactorSet factors_of_length(const GeneratorSpec& gen, std::size_t l,
                                   StabilizationPolicy policy = {}, PrefixCache* cache = nullptr) {
    if (l < 1) throw std::invalid_argument("factor length must be >= 1");
    FactorSet result;
    result.length = l;

    PrefixCache local(gen);
    PrefixCache& pc = cache ? *cache : local;

    std::size_t n = policy.initial_prefix ? policy.initial_prefix : std::max(4 * l, std::size_t{1024});
    n = std::min(n, policy.prefix_cap);

    std::unordered_set<std::string_view> seen;
    // The factor set grows monotonically with the prefix, so "unchanged"
    // reduces to an equal distinct-window count.
    std::size_t count = detail::count_distinct_windows(pc.ensure(n), l, seen);
    int stable_streak = 0;
    bool stabilized = false;
    while (true) {
        if (n >= policy.prefix_cap) break;
        std::size_t next = std::min(policy.prefix_cap, n * 2);
        std::size_t next_count = detail::count_distinct_windows(pc.ensure(next), l, seen);
        stable_streak = (next_count == count) ? stable_streak + 1 : 0;
        n = next;
        count = next_count;
        if (stable_streak >= 2) {
            stabilized = true;
            break;
        }
    }

    // `seen` holds the distinct windows of the final prefix.
    std::set<std::string_view> ordered(seen.begin(), seen.end());
    result.factors.reserve(ordered.size());
    for (std::string_view sv : ordered) {
        std::vector<Letter> ls(reinterpret_cast<const Letter*>(sv.data()),
                               reinterpret_cast<const Letter*>(sv.data()) + sv.size());
        result.factors.push_back(FiniteWord::trusted(gen.alphabet(), std::move(ls)));
    }
    result.prefix_used = n;
    result.stabilized = stabilized;
    return result;
}

struct EndpointPairs {
    std::vector<std::pair<Letter, Letter>> pairs;  // sorted, distinct
    std::size_t prefix_used = 0;
    bool stabilized = false;
};

/// The set {(u[0], u[l-1]) : u a length-l factor}.
inline EndpointPairs endpoint_pairs(const GeneratorSpec& gen, std::size_t l,
                                    StabilizationPolicy policy = {}, PrefixCache* cache = nullptr) {
    if (l < 2) throw std::invalid_argument("endpoint_pairs needs l >= 2");
    FactorSet fs = factors_of_length(gen, l, policy, cache);
    std::set<std::pair<Letter, Letter>> pairs;
    for (const FiniteWord& u : fs.factors) pairs.emplace(u[0], u[u.size() - 1]);
    return {std::vector<std::pair<Letter, Letter>>(pairs.begin(), pairs.end()), fs.prefix_used, fs.stabilized};
}

struct OnesInterval {
    int min = 0;
    int max = 0;
    bool gap_free = false;
    std::size_t prefix_used = 0;
    bool stabilized = false;
};

/// Min/max count of letter 1 over the length-l factors, and whether every
/// intermediate count is attained.
inline OnesInterval ones_count_interval(const GeneratorSpec& gen, std::size_t l,
                                        StabilizationPolicy policy = {}, PrefixCache* cache = nullptr) {
    if (l < 1) throw std::invalid_argument("ones_count_interval needs l >= 1");
    if (gen.alphabet().size() < 2) throw std::invalid_argument("alphabet has no letter 1");
    FactorSet fs = factors_of_length(gen, l, policy, cache);
    std::set<int> ones;
    for (const FiniteWord& u : fs.factors) {
        int c = 0;
        for (Letter a : u.letters()) c += (a == 1);
        ones.insert(c);
    }
    OnesInterval out;
    out.prefix_used = fs.prefix_used;
    out.stabilized = fs.stabilized;
    if (ones.empty()) return out;
    out.min = *ones.begin();
    out.max = *ones.rbegin();
    out.gap_free = static_cast<int>(ones.size()) == out.max - out.min + 1;
    return out;
}

}  // namespace orbitwords
