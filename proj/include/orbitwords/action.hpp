#pragma once

// Position groups, product actions G x H_l, and orbit canonicalization.
// The position convention: h moves the letter at position i to position
// h(i), i.e. (h . w)[h(i)] = w[i].

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitwords/group.hpp"
#include "orbitwords/word.hpp"

namespace orbitwords {

class PositionPerm {
public:
    explicit PositionPerm(std::vector<std::uint32_t> mapping) : map_(std::move(mapping)) {
        std::vector<bool> seen(map_.size(), false);
        for (std::uint32_t x : map_) {
            if (x >= map_.size() || seen[x]) throw std::invalid_argument("position mapping is not a bijection");
            seen[x] = true;
        }
    }

    static PositionPerm identity(std::size_t len) {
        std::vector<std::uint32_t> m(len);
        for (std::size_t i = 0; i < len; ++i) m[i] = static_cast<std::uint32_t>(i);
        return PositionPerm(std::move(m));
    }

    static PositionPerm parse_cycles(std::size_t len, std::string_view text) {
        // Reuse the alphabet-cycle parser on an index alphabet when short
        // enough; otherwise parse directly.
        std::vector<std::uint32_t> m(len);
        for (std::size_t i = 0; i < len; ++i) m[i] = static_cast<std::uint32_t>(i);
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
        };
        skip_ws();
        while (i < text.size()) {
            if (text[i] != '(') throw std::invalid_argument("expected '(' in position cycle notation");
            ++i;
            std::vector<std::size_t> cyc;
            skip_ws();
            while (i < text.size() && text[i] != ')') {
                std::size_t start = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
                if (i == start) throw std::invalid_argument("expected position index");
                std::size_t v = std::stoull(std::string(text.substr(start, i - start)));
                if (v >= len) throw std::invalid_argument("cycle entry outside position range");
                cyc.push_back(v);
                skip_ws();
            }
            if (i == text.size()) throw std::invalid_argument("unterminated cycle");
            ++i;
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                for (std::size_t u = t + 1; u < cyc.size(); ++u) {
                    if (cyc[t] == cyc[u]) throw std::invalid_argument("repeated entry in cycle");
                }
            }
            if (cyc.size() >= 2) {
                for (std::size_t t = 0; t < cyc.size(); ++t) {
                    m[cyc[t]] = static_cast<std::uint32_t>(cyc[(t + 1) % cyc.size()]);
                }
            }
            skip_ws();
        }
        return PositionPerm(std::move(m));
    }

    std::size_t length() const { return map_.size(); }
    std::uint32_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::uint32_t>& mapping() const { return map_; }

    PositionPerm after(const PositionPerm& g) const {
        if (map_.size() != g.map_.size()) throw std::invalid_argument("length mismatch in composition");
        std::vector<std::uint32_t> m(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) m[i] = map_[g.map_[i]];
        return PositionPerm(std::move(m));
    }

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

    friend bool operator==(const PositionPerm&, const PositionPerm&) = default;
    friend auto operator<=>(const PositionPerm& x, const PositionPerm& y) { return x.map_ <=> y.map_; }

private:
    std::vector<std::uint32_t> map_;
};

enum class PositionFamilyKind { Trivial, FullSymmetric, Rotation, Reversal, FirstLastSwap, Generated };

inline std::string family_name(PositionFamilyKind k) {
    switch (k) {
        case PositionFamilyKind::Trivial: return "trivial";
        case PositionFamilyKind::FullSymmetric: return "full-symmetric";
        case PositionFamilyKind::Rotation: return "rotation";
        case PositionFamilyKind::Reversal: return "reversal";
        case PositionFamilyKind::FirstLastSwap: return "first-last";
        case PositionFamilyKind::Generated: return "generated";
    }
    return "?";
}

inline PositionFamilyKind parse_family_name(std::string_view s) {
    if (s == "trivial") return PositionFamilyKind::Trivial;
    if (s == "full-symmetric" || s == "abelian") return PositionFamilyKind::FullSymmetric;
    if (s == "rotation") return PositionFamilyKind::Rotation;
    if (s == "reversal") return PositionFamilyKind::Reversal;
    if (s == "first-last") return PositionFamilyKind::FirstLastSwap;
    throw std::invalid_argument("unknown position family '" + std::string(s) + "'");
}

/// Symbolic families are valid for every length; a Generated family holds
/// an enumerated closure of position permutations for one fixed length.
class PositionFamily {
public:
    static PositionFamily trivial() { return PositionFamily(PositionFamilyKind::Trivial); }
    static PositionFamily full_symmetric() { return PositionFamily(PositionFamilyKind::FullSymmetric); }
    static PositionFamily rotation() { return PositionFamily(PositionFamilyKind::Rotation); }
    static PositionFamily reversal() { return PositionFamily(PositionFamilyKind::Reversal); }
    static PositionFamily first_last_swap() { return PositionFamily(PositionFamilyKind::FirstLastSwap); }
    static PositionFamily symbolic(PositionFamilyKind k) {
        if (k == PositionFamilyKind::Generated) throw std::invalid_argument("generated family needs generators");
        return PositionFamily(k);
    }

    static PositionFamily generated(std::size_t length, std::vector<PositionPerm> gens,
                                    std::size_t max_elements = 1'000'000) {
        for (const auto& g : gens) {
            if (g.length() != length) throw std::invalid_argument("generator length mismatch");
        }
        PositionFamily fam(PositionFamilyKind::Generated);
        fam.length_ = length;
        fam.generators_ = gens;
        std::set<PositionPerm> elems;
        std::vector<PositionPerm> frontier;
        PositionPerm id = PositionPerm::identity(length);
        elems.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            PositionPerm cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                PositionPerm next = g.after(cur);
                if (elems.insert(next).second) {
                    if (elems.size() > max_elements) {
                        throw BudgetError("generated position family exceeds cap");
                    }
                    frontier.push_back(next);
                }
            }
        }
        fam.elements_.assign(elems.begin(), elems.end());
        return fam;
    }

    PositionFamilyKind kind() const { return kind_; }
    bool valid_for(std::size_t len) const { return kind_ != PositionFamilyKind::Generated || len == length_; }
    std::size_t generated_length() const { return length_; }
    const std::vector<PositionPerm>& elements() const { return elements_; }
    const std::vector<PositionPerm>& generators() const { return generators_; }

    std::string describe() const {
        if (kind_ != PositionFamilyKind::Generated) return family_name(kind_);
        std::string s = "generated@" + std::to_string(length_);
        for (const auto& g : generators_) s += " " + g.cycle_notation();
        return s;
    }

private:
    explicit PositionFamily(PositionFamilyKind k) : kind_(k) {}

    PositionFamilyKind kind_;
    std::size_t length_ = 0;                 // Generated only
    std::vector<PositionPerm> generators_;   // Generated only
    std::vector<PositionPerm> elements_;     // Generated only
};

struct ActionPair {
    AlphabetGroup group;
    PositionFamily family;

    std::string describe() const { return group.describe() + " x " + family.describe(); }
};

inline FiniteWord apply_alphabet(const AlphabetPerm& g, const FiniteWord& w) {
    if (g.alphabet() != w.alphabet()) throw std::invalid_argument("alphabet mismatch in apply_alphabet");
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = g(w[i]);
    return FiniteWord::trusted(w.alphabet(), std::move(out));
}

inline FiniteWord apply_position(const PositionPerm& h, const FiniteWord& w) {
    if (h.length() != w.size()) throw std::invalid_argument("length mismatch in apply_position");
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[h(i)] = w[i];
    return FiniteWord::trusted(w.alphabet(), std::move(out));
}

namespace detail {

/// Booth's algorithm: index of the lexicographically least rotation.
inline std::size_t least_rotation_index(std::span<const Letter> s) {
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::vector<std::int64_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        Letter sj = s[j % n];
        std::int64_t i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

inline std::vector<Letter> rotate_to(std::span<const Letter> s, std::size_t start) {
    std::vector<Letter> out;
    out.reserve(s.size());
    out.insert(out.end(), s.begin() + start, s.end());
    out.insert(out.end(), s.begin(), s.begin() + start);
    return out;
}

}  // namespace detail

/// Orbit fingerprint: equal keys iff same G x H_l orbit. Byte layout is a
/// family tag, the word length (LE32), then a family-specific payload, so
/// keys from different families or lengths can never collide.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}
    const std::string& bytes() const { return bytes_; }
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey& x, const CanonicalKey& y) { return x.bytes_ <=> y.bytes_; }

private:
    std::string bytes_;
};

namespace detail {

inline void append_le32(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline std::vector<int> counts_of(std::span<const Letter> s, int k) {
    std::vector<int> c(k, 0);
    for (Letter a : s) ++c[a];
    return c;
}

}  // namespace detail

inline CanonicalKey canonical_key(const FiniteWord& w, const ActionPair& action) {
    if (w.empty()) throw std::invalid_argument("canonical_key needs a nonempty word");
    if (w.alphabet() != action.group.alphabet()) {
        throw std::invalid_argument("word alphabet does not match action alphabet");
    }
    if (!action.family.valid_for(w.size())) {
        throw std::invalid_argument("position family not valid for words of length " + std::to_string(w.size()));
    }
    const int k = w.alphabet().size();
    const auto kind = action.family.kind();
    std::string key;
    key.push_back(static_cast<char>(kind));
    detail::append_le32(key, static_cast<std::uint32_t>(w.size()));

    // The alphabet and position actions commute, so canonicalizing the H
    // part of each g-translate and then minimizing over G is a complete
    // orbit invariant without enumerating |G| * |H| pairs.
    if (kind == PositionFamilyKind::FullSymmetric) {
        // Lexicographically greatest permuted count vector; for the full
        // symmetric alphabet group this is the weakly decreasing sort.
        std::vector<int> base = detail::counts_of(w.span(), k);
        std::vector<int> best;
        std::vector<int> cur(k);
        for (const AlphabetPerm& g : action.group.elements()) {
            for (int a = 0; a < k; ++a) cur[g(static_cast<Letter>(a))] = base[a];
            if (best.empty() || cur > best) best = cur;
        }
        for (int c : best) detail::append_le32(key, static_cast<std::uint32_t>(c));
        return CanonicalKey(std::move(key));
    }

    std::vector<Letter> best;
    std::vector<Letter> gw(w.size());
    auto consider = [&](const std::vector<Letter>& cand) {
        if (best.empty() || cand < best) best = cand;
    };
    for (const AlphabetPerm& g : action.group.elements()) {
        for (std::size_t i = 0; i < w.size(); ++i) gw[i] = g(w[i]);
        switch (kind) {
            case PositionFamilyKind::Trivial:
                consider(gw);
                break;
            case PositionFamilyKind::Rotation:
                consider(detail::rotate_to(gw, detail::least_rotation_index(gw)));
                break;
            case PositionFamilyKind::Reversal: {
                consider(gw);
                std::vector<Letter> rev(gw.rbegin(), gw.rend());
                consider(rev);
                break;
            }
            case PositionFamilyKind::FirstLastSwap: {
                consider(gw);
                std::vector<Letter> sw = gw;
                if (sw.size() >= 2) std::swap(sw.front(), sw.back());
                consider(sw);
                break;
            }
            case PositionFamilyKind::Generated: {
                std::vector<Letter> hv(gw.size());
                for (const PositionPerm& h : action.family.elements()) {
                    for (std::size_t i = 0; i < gw.size(); ++i) hv[h(i)] = gw[i];
                    consider(hv);
                }
                break;
            }
            default:
                break;
        }
    }
    key.append(reinterpret_cast<const char*>(best.data()), best.size());
    return CanonicalKey(std::move(key));
}

inline bool same_orbit(const FiniteWord& u, const FiniteWord& v, const ActionPair& action) {
    if (u.size() != v.size()) throw std::invalid_argument("same_orbit needs words of equal length");
    return canonical_key(u, action) == canonical_key(v, action);
}

}  // namespace orbitwords
