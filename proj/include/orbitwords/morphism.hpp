#pragma once

// Morphisms: concatenation-preserving maps between words, determined by
// one image word per source letter.

#include <string>
#include <vector>

#include "orbitwords/word.hpp"

namespace orbitwords {

class Morphism {
public:
    Morphism(Alphabet source, Alphabet target, std::vector<FiniteWord> images)
        : source_(source), target_(target), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != source_.size()) {
            throw std::invalid_argument("morphism needs exactly one image per source letter");
        }
        for (const FiniteWord& img : images_) {
            if (img.alphabet() != target_) {
                throw std::invalid_argument("morphism image over wrong alphabet");
            }
        }
    }

    /// Endomorphism from letter -> digit-string rules, e.g. {"012","02","1"}.
    static Morphism from_rules(Alphabet source, Alphabet target, const std::vector<std::string>& rules) {
        std::vector<FiniteWord> images;
        images.reserve(rules.size());
        for (const std::string& r : rules) images.push_back(FiniteWord::from_digits(target, r));
        return Morphism(source, target, std::move(images));
    }

    Alphabet source() const { return source_; }
    Alphabet target() const { return target_; }
    const FiniteWord& image(Letter a) const {
        if (!source_.contains(a)) throw std::invalid_argument("letter outside source alphabet");
        return images_[a];
    }
    const std::vector<FiniteWord>& images() const { return images_; }

    FiniteWord apply(const FiniteWord& w) const {
        if (w.alphabet() != source_) throw std::invalid_argument("morphism applied to word over wrong alphabet");
        std::size_t total = 0;
        for (Letter a : w.letters()) total += images_[a].size();
        std::vector<Letter> out;
        out.reserve(total);
        for (Letter a : w.letters()) {
            const auto& img = images_[a].letters();
            out.insert(out.end(), img.begin(), img.end());
        }
        return FiniteWord::trusted(target_, std::move(out));
    }

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<FiniteWord> images_;
};

inline FiniteWord morphic_image(const FiniteWord& w, const Morphism& m) { return m.apply(w); }

struct MorphismValidation {
    bool ok = false;
    std::string reason;
};

/// A fixed point of m prolongable from `seed` needs m(seed) to start with
/// seed and to be strictly growing (length >= 2).
inline MorphismValidation validate_morphism(const Morphism& m, Letter seed) {
    if (!m.source().contains(seed)) return {false, "seed letter outside source alphabet"};
    if (m.source() != m.target()) return {false, "fixed points need an endomorphism (source == target)"};
    const FiniteWord& img = m.image(seed);
    if (img.empty() || img[0] != seed) return {false, "image does not start with seed"};
    if (img.size() < 2) return {false, "image does not grow"};
    return {true, ""};
}

}  // namespace orbitwords
