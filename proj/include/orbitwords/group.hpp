#pragma once

// Permutation groups acting on the alphabet: generator closure by
// breadth-first products, cycle-notation parsing and printing.

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbitwords/word.hpp"

namespace orbitwords {

class AlphabetPerm {
public:
    static AlphabetPerm identity(Alphabet a) {
        std::vector<Letter> m(a.size());
        for (int i = 0; i < a.size(); ++i) m[i] = static_cast<Letter>(i);
        return AlphabetPerm(a, std::move(m), true);
    }

    AlphabetPerm(Alphabet a, std::vector<Letter> mapping) : AlphabetPerm(a, std::move(mapping), true) {
        std::vector<bool> seen(alphabet_.size(), false);
        if (static_cast<int>(map_.size()) != alphabet_.size()) {
            throw std::invalid_argument("permutation must map every letter");
        }
        for (Letter x : map_) {
            if (!alphabet_.contains(x) || seen[x]) throw std::invalid_argument("mapping is not a bijection");
            seen[x] = true;
        }
    }

    Alphabet alphabet() const { return alphabet_; }
    Letter operator()(Letter a) const { return map_[a]; }
    const std::vector<Letter>& mapping() const { return map_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (map_[i] != i) return false;
        }
        return true;
    }

    /// (f.then_apply(g))(x) = f(g(x))
    AlphabetPerm after(const AlphabetPerm& g) const {
        if (alphabet_ != g.alphabet_) throw std::invalid_argument("alphabet mismatch in composition");
        std::vector<Letter> m(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) m[i] = map_[g.map_[i]];
        return AlphabetPerm(alphabet_, std::move(m), true);
    }

    AlphabetPerm inverse() const {
        std::vector<Letter> m(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) m[map_[i]] = static_cast<Letter>(i);
        return AlphabetPerm(alphabet_, std::move(m), true);
    }

    friend bool operator==(const AlphabetPerm&, const AlphabetPerm&) = default;
    friend auto operator<=>(const AlphabetPerm& x, const AlphabetPerm& y) {
        if (auto c = x.alphabet_ <=> y.alphabet_; c != 0) return c;
        return x.map_ <=> y.map_;
    }

    /// Canonical cycle text: "(0 2)", "(0 1 2)(3 4)", identity "()".
    std::string cycle_notation() const {
        std::string out;
        std::vector<bool> done(map_.size(), false);
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (done[i] || map_[i] == i) continue;
            out += '(';
            std::size_t j = i;
            bool first = true;
            while (!done[j]) {
                done[j] = true;
                if (!first) out += ' ';
                out += std::to_string(j);
                first = false;
                j = map_[j];
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    /// Parse cycle notation over the given alphabet, e.g. "(0 1 2)(3 4)".
    /// Whitespace or commas separate the entries of a cycle.
    static AlphabetPerm parse_cycles(Alphabet a, std::string_view text) {
        std::vector<Letter> m(a.size());
        for (int i = 0; i < a.size(); ++i) m[i] = static_cast<Letter>(i);
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
        };
        skip_ws();
        bool any = false;
        while (i < text.size()) {
            if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
            ++i;
            std::vector<int> cyc;
            skip_ws();
            while (i < text.size() && text[i] != ')') {
                std::size_t start = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
                if (i == start) throw std::invalid_argument("expected letter index in cycle notation");
                int v = std::stoi(std::string(text.substr(start, i - start)));
                if (v < 0 || v >= a.size()) throw std::invalid_argument("cycle entry outside alphabet");
                cyc.push_back(v);
                skip_ws();
            }
            if (i == text.size()) throw std::invalid_argument("unterminated cycle");
            ++i;  // ')'
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                for (std::size_t u = t + 1; u < cyc.size(); ++u) {
                    if (cyc[t] == cyc[u]) throw std::invalid_argument("repeated entry in cycle");
                }
            }
            if (cyc.size() >= 2) {
                for (std::size_t t = 0; t < cyc.size(); ++t) {
                    m[cyc[t]] = static_cast<Letter>(cyc[(t + 1) % cyc.size()]);
                }
            }
            any = true;
            skip_ws();
        }
        if (!any && text.find("()") == std::string_view::npos && !text.empty()) {
            throw std::invalid_argument("empty cycle notation");
        }
        return AlphabetPerm(a, std::move(m));
    }

private:
    AlphabetPerm(Alphabet a, std::vector<Letter> mapping, bool /*trusted*/)
        : alphabet_(a), map_(std::move(mapping)) {}

    Alphabet alphabet_;
    std::vector<Letter> map_;
};

struct GroupOptions {
    std::size_t max_elements = 40320;  // 8!
};

class AlphabetGroup {
public:
    static AlphabetGroup close(Alphabet a, std::vector<AlphabetPerm> generators, GroupOptions opts = {}) {
        for (const auto& g : generators) {
            if (g.alphabet() != a) throw std::invalid_argument("generator over wrong alphabet");
        }
        std::set<AlphabetPerm> elems;
        std::vector<AlphabetPerm> frontier;
        AlphabetPerm id = AlphabetPerm::identity(a);
        elems.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            AlphabetPerm cur = frontier.back();
            frontier.pop_back();
            for (const AlphabetPerm& g : generators) {
                AlphabetPerm next = g.after(cur);
                if (elems.insert(next).second) {
                    if (elems.size() > opts.max_elements) {
                        throw BudgetError("group closure exceeds cap of " + std::to_string(opts.max_elements));
                    }
                    frontier.push_back(next);
                }
            }
        }
        // Finite closure of a generating set under composition contains
        // inverses automatically.
        AlphabetGroup grp;
        grp.alphabet_ = a;
        grp.generators_ = std::move(generators);
        grp.elements_.assign(elems.begin(), elems.end());
        return grp;
    }

    static AlphabetGroup trivial(Alphabet a) { return close(a, {}); }

    static AlphabetGroup cyclic(Alphabet a) {
        std::vector<Letter> m(a.size());
        for (int i = 0; i < a.size(); ++i) m[i] = static_cast<Letter>((i + 1) % a.size());
        return close(a, {AlphabetPerm(a, std::move(m))});
    }

    static AlphabetGroup symmetric(Alphabet a, GroupOptions opts = {}) {
        std::vector<AlphabetPerm> gens;
        for (int i = 0; i + 1 < a.size(); ++i) {
            std::vector<Letter> m(a.size());
            for (int j = 0; j < a.size(); ++j) m[j] = static_cast<Letter>(j);
            std::swap(m[i], m[i + 1]);
            gens.push_back(AlphabetPerm(a, std::move(m)));
        }
        return close(a, std::move(gens), opts);
    }

    static AlphabetGroup transposition(Alphabet a, Letter x, Letter y) {
        std::vector<Letter> m(a.size());
        for (int j = 0; j < a.size(); ++j) m[j] = static_cast<Letter>(j);
        std::swap(m[x], m[y]);
        return close(a, {AlphabetPerm(a, std::move(m))});
    }

    Alphabet alphabet() const { return alphabet_; }
    const std::vector<AlphabetPerm>& elements() const { return elements_; }
    const std::vector<AlphabetPerm>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool is_trivial() const { return elements_.size() == 1; }

    bool contains(const AlphabetPerm& g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }

    bool is_subgroup_of(const AlphabetGroup& other) const {
        if (alphabet_ != other.alphabet_) return false;
        for (const auto& g : elements_) {
            if (!other.contains(g)) return false;
        }
        return true;
    }

    std::string describe() const {
        std::string s = "<";
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i) s += ", ";
            s += generators_[i].cycle_notation();
        }
        s += ">";
        if (generators_.empty()) s = "<id>";
        return s + " order " + std::to_string(elements_.size());
    }

private:
    Alphabet alphabet_;
    std::vector<AlphabetPerm> generators_;
    std::vector<AlphabetPerm> elements_;  // sorted
};

/// Spec'd free-function form.
inline AlphabetGroup close_group(Alphabet a, std::vector<AlphabetPerm> generators, GroupOptions opts = {}) {
    return AlphabetGroup::close(a, std::move(generators), opts);
}

}  // namespace orbitwords
