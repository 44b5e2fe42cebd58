#pragma once

// Depth-first search for the longest words satisfying a conjunction of
// power-avoidance constraints. Constraints are factorial (closed under
// factors), so after appending a letter only occurrences whose last block
// ends at the new position need checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbitwords/powers.hpp"
#include "orbitwords/word.hpp"

namespace orbitwords {

struct SearchConstraint {
    std::string name;
    PowerQuery query;

    static SearchConstraint squarefree(Alphabet a) { return {"squarefree", PowerQuery::square(a)}; }
    static SearchConstraint no_caesar_square(Alphabet a, std::size_t min_half_length) {
        return {"no-caesar-square(n>=" + std::to_string(min_half_length) + ")",
                PowerQuery::caesar_square(a, min_half_length)};
    }
    static SearchConstraint custom(std::string name, PowerQuery q) { return {std::move(name), std::move(q)}; }
};

enum class WitnessPolicy { First, All, Count };

struct SearchProblem {
    Alphabet alphabet;
    std::vector<SearchConstraint> constraints;
    std::size_t length_cap = 1'000'000;
    WitnessPolicy policy = WitnessPolicy::First;
};

struct SearchReport {
    std::size_t max_length = 0;
    bool exhausted = false;       // true = the whole space fit under the cap
    std::vector<FiniteWord> witnesses;
    std::uint64_t witness_count = 0;
    std::uint64_t nodes_expanded = 0;
};

namespace detail {

/// Does some constrained power occurrence end exactly at position `last`?
inline bool violation_ending_at(const std::vector<Letter>& word, const PowerQuery& q, std::size_t last) {
    const std::size_t len = last + 1;
    const std::size_t rr = static_cast<std::size_t>(q.r);
    BlockChecker checker{q, std::span<const Letter>(word.data(), len)};
    std::size_t hi = len / rr;
    if (q.n_max) hi = std::min(hi, *q.n_max);
    for (std::size_t n = q.n_min; n <= hi; ++n) {
        std::size_t start = len - rr * n;
        if (checker.check(start, n)) return true;
    }
    return false;
}

}  // namespace detail

inline SearchReport dfs_longest(const SearchProblem& p) {
    if (p.constraints.empty()) throw std::invalid_argument("search needs at least one constraint");
    if (p.length_cap > 1'000'000) throw std::invalid_argument("length cap above 10^6");
    for (const SearchConstraint& c : p.constraints) {
        if (c.query.group.alphabet() != p.alphabet) {
            throw std::invalid_argument("constraint group alphabet mismatch");
        }
    }

    SearchReport report;
    std::vector<Letter> word;
    word.reserve(p.length_cap);
    bool cap_hit = false;
    const int k = p.alphabet.size();

    auto record = [&]() {
        if (word.size() < report.max_length) return;
        if (word.size() > report.max_length) {
            report.max_length = word.size();
            report.witnesses.clear();
            report.witness_count = 0;
        }
        ++report.witness_count;
        switch (p.policy) {
            case WitnessPolicy::First:
                if (report.witnesses.empty()) {
                    report.witnesses.push_back(FiniteWord::trusted(p.alphabet, word));
                }
                break;
            case WitnessPolicy::All:
                report.witnesses.push_back(FiniteWord::trusted(p.alphabet, word));
                break;
            case WitnessPolicy::Count:
                break;
        }
    };

    // Iterative DFS, letters tried in ascending order: the first word seen
    // at any depth is the lexicographically least valid one.
    std::vector<Letter> choice;  // next letter to try at each depth
    choice.push_back(0);
    record();
    while (!choice.empty()) {
        Letter next = choice.back();
        if (next >= k) {
            choice.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        ++choice.back();
        word.push_back(next);
        ++report.nodes_expanded;
        bool ok = true;
        for (const SearchConstraint& c : p.constraints) {
            if (detail::violation_ending_at(word, c.query, word.size() - 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            word.pop_back();
            continue;
        }
        record();
        if (word.size() == p.length_cap) {
            cap_hit = true;
            // Nothing above the cap can be learned; with a single requested
            // witness there is nothing below it either.
            if (p.policy == WitnessPolicy::First) break;
            word.pop_back();
            continue;
        }
        choice.push_back(0);
    }
    report.exhausted = !cap_hit;
    return report;
}

/// One representative (lexicographically least) per orbit of the witness
/// set under an alphabet group.
inline std::vector<FiniteWord> canonical_witnesses(const SearchReport& report, const AlphabetGroup& group) {
    std::map<CanonicalKey, FiniteWord> reps;
    ActionPair action{group, PositionFamily::trivial()};
    for (const FiniteWord& w : report.witnesses) {
        CanonicalKey key = canonical_key(w, action);
        auto it = reps.find(key);
        if (it == reps.end() || w < it->second) reps.insert_or_assign(key, w);
    }
    std::vector<FiniteWord> out;
    out.reserve(reps.size());
    for (auto& [k, w] : reps) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace orbitwords
