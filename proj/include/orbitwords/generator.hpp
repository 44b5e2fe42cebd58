#pragma once

// Recipes producing arbitrarily long prefixes of infinite words: fixed
// points of prolongable morphisms, morphic images of other generators,
// periodic words, and characteristic Sturmian words built by the
// standard-word recursion.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "orbitwords/morphism.hpp"
#include "orbitwords/word.hpp"

namespace orbitwords {

struct PrefixOptions {
    std::size_t max_letters = std::size_t{1} << 26;
};

class GeneratorSpec;

struct FixedPointSpec {
    Morphism morphism;
    Letter seed;
};

struct MorphicImageSpec {
    std::shared_ptr<const GeneratorSpec> inner;
    Morphism coding;
};

struct PeriodicSpec {
    FiniteWord pattern;
};

struct SturmianSpec {
    std::vector<int> quotients;
};

class GeneratorSpec {
public:
    using Variant = std::variant<FixedPointSpec, MorphicImageSpec, PeriodicSpec, SturmianSpec>;

    static GeneratorSpec fixed_point(Morphism m, Letter seed) {
        MorphismValidation v = validate_morphism(m, seed);
        if (!v.ok) throw std::invalid_argument("not prolongable: " + v.reason);
        Alphabet a = m.target();
        return GeneratorSpec(Variant(FixedPointSpec{std::move(m), seed}), a);
    }

    static GeneratorSpec morphic_image(GeneratorSpec inner, Morphism coding) {
        if (coding.source() != inner.alphabet()) {
            throw std::invalid_argument("coding morphism source must match inner generator alphabet");
        }
        Alphabet a = coding.target();
        auto p = std::make_shared<const GeneratorSpec>(std::move(inner));
        return GeneratorSpec(Variant(MorphicImageSpec{std::move(p), std::move(coding)}), a);
    }

    static GeneratorSpec periodic(FiniteWord pattern) {
        if (pattern.empty()) throw std::invalid_argument("periodic pattern must be nonempty");
        Alphabet a = pattern.alphabet();
        return GeneratorSpec(Variant(PeriodicSpec{std::move(pattern)}), a);
    }

    /// Standard-word recursion s_{-1} = 1, s_0 = 0, s_{k+1} = s_k^{a_{k+1}} s_{k-1},
    /// the first quotient acting as the first exponent. The limit is the
    /// characteristic Sturmian word of slope [0; a1+1, a2, a3, ...].
    static GeneratorSpec sturmian(std::vector<int> quotients) {
        if (quotients.empty()) throw std::invalid_argument("sturmian quotient list must be nonempty");
        for (int q : quotients) {
            if (q < 1) throw std::invalid_argument("sturmian quotients must be >= 1");
        }
        return GeneratorSpec(Variant(SturmianSpec{std::move(quotients)}), Alphabet(2));
    }

    const Variant& variant() const { return *v_; }
    Alphabet alphabet() const { return alphabet_; }

    template <typename T>
    const T* get_if() const { return std::get_if<T>(v_.get()); }

private:
    GeneratorSpec(Variant v, Alphabet a) : v_(std::make_shared<const Variant>(std::move(v))), alphabet_(a) {}

    std::shared_ptr<const Variant> v_;
    Alphabet alphabet_;
};

namespace detail {

inline void generate_letters(const GeneratorSpec& gen, std::size_t n, const PrefixOptions& opts,
                             std::vector<Letter>& out);

inline void generate_fixed_point(const FixedPointSpec& fp, std::size_t n, std::vector<Letter>& out) {
    out.clear();
    if (n == 0) return;
    const auto& img0 = fp.morphism.image(fp.seed).letters();
    out.assign(img0.begin(), img0.end());
    // out always equals the image of the already-expanded prefix, so it is
    // itself a prefix of the fixed point.
    std::size_t next = 1;
    while (out.size() < n) {
        if (next >= out.size()) throw BudgetError("fixed point is finite; cannot extend");
        const auto& img = fp.morphism.image(out[next]).letters();
        out.insert(out.end(), img.begin(), img.end());
        ++next;
    }
    out.resize(n);
}

inline void generate_periodic(const PeriodicSpec& p, std::size_t n, std::vector<Letter>& out) {
    out.clear();
    out.reserve(n);
    const auto& pat = p.pattern.letters();
    for (std::size_t i = 0; i < n; ++i) out.push_back(pat[i % pat.size()]);
}

inline void generate_sturmian(const SturmianSpec& st, std::size_t n, const PrefixOptions& opts,
                              std::vector<Letter>& out) {
    out.clear();
    if (n == 0) return;
    std::vector<Letter> prev{1};  // s_{-1}
    std::vector<Letter> cur{0};   // s_0
    for (int a : st.quotients) {
        std::vector<Letter> next;
        std::size_t len = cur.size() * static_cast<std::size_t>(a) + prev.size();
        next.reserve(std::min(len, n + cur.size()));
        for (int i = 0; i < a && next.size() < n; ++i) {
            next.insert(next.end(), cur.begin(), cur.end());
        }
        if (next.size() < n) next.insert(next.end(), prev.begin(), prev.end());
        if (next.size() >= n) {
            next.resize(n);
            out = std::move(next);
            return;
        }
        if (next.size() > opts.max_letters) throw BudgetError("sturmian prefix exceeds byte budget");
        prev = std::move(cur);
        cur = std::move(next);
    }
    throw BudgetError("sturmian quotient list exhausted before reaching requested length; supply more quotients");
}

inline void generate_morphic_image(const MorphicImageSpec& mi, std::size_t n, const PrefixOptions& opts,
                                   std::vector<Letter>& out) {
    out.clear();
    if (n == 0) return;
    std::size_t inner_len = n;
    std::vector<Letter> inner;
    while (true) {
        generate_letters(*mi.inner, inner_len, opts, inner);
        out.clear();
        out.reserve(n);
        for (Letter a : inner) {
            const auto& img = mi.coding.image(a).letters();
            for (Letter b : img) {
                out.push_back(b);
                if (out.size() == n) return;
            }
        }
        if (inner_len >= opts.max_letters) throw BudgetError("morphic image exceeds byte budget");
        inner_len = std::min(opts.max_letters, inner_len * 2);
    }
}

inline void generate_letters(const GeneratorSpec& gen, std::size_t n, const PrefixOptions& opts,
                             std::vector<Letter>& out) {
    if (n > opts.max_letters) {
        throw BudgetError("requested prefix of " + std::to_string(n) + " letters exceeds budget of " +
                          std::to_string(opts.max_letters));
    }
    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, FixedPointSpec>) {
                generate_fixed_point(spec, n, out);
            } else if constexpr (std::is_same_v<T, PeriodicSpec>) {
                generate_periodic(spec, n, out);
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                generate_sturmian(spec, n, opts, out);
            } else {
                generate_morphic_image(spec, n, opts, out);
            }
        },
        gen.variant());
}

}  // namespace detail

/// First n letters of the infinite word described by `gen`.
inline FiniteWord prefix(const GeneratorSpec& gen, std::size_t n, const PrefixOptions& opts = {}) {
    std::vector<Letter> out;
    detail::generate_letters(gen, n, opts, out);
    return FiniteWord::trusted(gen.alphabet(), std::move(out));
}

/// The characteristic Sturmian word for a quotient list, as a one-call form.
inline FiniteWord sturmian_prefix(const std::vector<int>& quotients, std::size_t n,
                                  const PrefixOptions& opts = {}) {
    return prefix(GeneratorSpec::sturmian(quotients), n, opts);
}

/// Grows one materialized prefix of a generator on demand so repeated
/// factor enumerations at increasing lengths share the work.
class PrefixCache {
public:
    explicit PrefixCache(GeneratorSpec gen, PrefixOptions opts = {}) : gen_(std::move(gen)), opts_(opts) {}

    std::span<const Letter> ensure(std::size_t n) {
        if (buf_.size() < n) detail::generate_letters(gen_, n, opts_, buf_);
        return {buf_.data(), n};
    }

    const GeneratorSpec& generator() const { return gen_; }
    Alphabet alphabet() const { return gen_.alphabet(); }

private:
    GeneratorSpec gen_;
    PrefixOptions opts_;
    std::vector<Letter> buf_;
};

// ---------------------------------------------------------------------------
// Built-in words.

inline Morphism vtm_morphism() { return Morphism::from_rules(Alphabet(3), Alphabet(3), {"012", "02", "1"}); }
inline Morphism pd_morphism() { return Morphism::from_rules(Alphabet(2), Alphabet(2), {"01", "00"}); }
inline Morphism tm_morphism() { return Morphism::from_rules(Alphabet(2), Alphabet(2), {"01", "10"}); }
/// Squashes 0 and 2 to 0, keeps 1; maps vtm onto pd.
inline Morphism squash02_morphism() { return Morphism::from_rules(Alphabet(3), Alphabet(2), {"0", "1", "0"}); }
inline Morphism psi_morphism() { return Morphism::from_rules(Alphabet(2), Alphabet(2), {"0011", "0110"}); }

inline GeneratorSpec builtin_vtm() { return GeneratorSpec::fixed_point(vtm_morphism(), 0); }
inline GeneratorSpec builtin_pd() { return GeneratorSpec::fixed_point(pd_morphism(), 0); }
inline GeneratorSpec builtin_tm() { return GeneratorSpec::fixed_point(tm_morphism(), 0); }
inline GeneratorSpec builtin_psi_tm() { return GeneratorSpec::morphic_image(builtin_tm(), psi_morphism()); }
inline GeneratorSpec builtin_period012() {
    return GeneratorSpec::periodic(FiniteWord::from_digits(Alphabet(3), "012"));
}
/// Characteristic Sturmian word with slope in (0, 1/4) used throughout the
/// verification suite; quotients [5, 1, 1, ...] give slope ~0.1511.
inline GeneratorSpec builtin_w_alpha() {
    std::vector<int> q{5};
    q.insert(q.end(), 60, 1);
    return GeneratorSpec::sturmian(std::move(q));
}

inline const std::vector<std::pair<std::string, GeneratorSpec>>& builtin_generators() {
    static const std::vector<std::pair<std::string, GeneratorSpec>> table = {
        {"vtm", builtin_vtm()},           {"pd", builtin_pd()},
        {"tm", builtin_tm()},             {"psi-tm", builtin_psi_tm()},
        {"period012", builtin_period012()}, {"w-alpha", builtin_w_alpha()},
    };
    return table;
}

}  // namespace orbitwords
