#pragma once

// Finite words over small integer alphabets. Letters are the integers
// 0..k-1 for an alphabet of size k <= 16; rendering to digit strings is a
// presentation concern handled here only for I/O convenience.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitwords {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabetSize = 16;

/// Thrown when a computation would exceed a configured resource budget
/// (prefix byte budgets, group enumeration caps, quotient exhaustion).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a caller required a stabilized factor set and the
/// enumeration hit its prefix cap first.
struct StabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(int size) {
        if (size < 1 || size > kMaxAlphabetSize) {
            throw std::invalid_argument("alphabet size must be in 1.." +
                                        std::to_string(kMaxAlphabetSize) +
                                        ", got " + std::to_string(size));
        }
        size_ = static_cast<Letter>(size);
    }
    int size() const { return size_; }
    bool contains(Letter a) const { return a < size_; }
    friend bool operator==(Alphabet, Alphabet) = default;
    friend auto operator<=>(Alphabet, Alphabet) = default;

private:
    Letter size_ = 1;
};

inline char letter_to_char(Letter a) {
    return static_cast<char>(a < 10 ? '0' + a : 'a' + (a - 10));
}

inline int char_to_letter(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
    return -1;
}

class FiniteWord {
public:
    FiniteWord() = default;
    explicit FiniteWord(Alphabet a) : alphabet_(a) {}

    FiniteWord(Alphabet a, std::vector<Letter> letters) : alphabet_(a), letters_(std::move(letters)) {
        for (Letter x : letters_) {
            if (!alphabet_.contains(x)) {
                throw std::invalid_argument("letter " + std::to_string(int(x)) +
                                            " outside alphabet of size " +
                                            std::to_string(alphabet_.size()));
            }
        }
    }

    /// Construction bypassing the per-letter check; callers guarantee the
    /// letters are already valid for `a` (library-internal hot paths).
    static FiniteWord trusted(Alphabet a, std::vector<Letter> letters) {
        FiniteWord w(a);
        w.letters_ = std::move(letters);
        return w;
    }

    /// Parse a digit string such as "0102" (letters 10..15 as 'a'..'f').
    static FiniteWord from_digits(Alphabet a, std::string_view digits) {
        std::vector<Letter> ls;
        ls.reserve(digits.size());
        for (char c : digits) {
            int v = char_to_letter(c);
            if (v < 0) throw std::invalid_argument(std::string("bad letter character '") + c + "'");
            ls.push_back(static_cast<Letter>(v));
        }
        return FiniteWord(a, std::move(ls));
    }

    Alphabet alphabet() const { return alphabet_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::span<const Letter> span() const { return letters_; }

    /// Contiguous piece [pos, pos+len).
    FiniteWord factor(std::size_t pos, std::size_t len) const {
        if (pos + len > letters_.size()) throw std::out_of_range("factor out of range");
        return trusted(alphabet_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
    }

    FiniteWord reversed() const {
        std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
        return trusted(alphabet_, std::move(ls));
    }

    FiniteWord concat(const FiniteWord& other) const {
        if (alphabet_ != other.alphabet_) throw std::invalid_argument("alphabet mismatch in concat");
        std::vector<Letter> ls = letters_;
        ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
        return trusted(alphabet_, std::move(ls));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(letters_.size());
        for (Letter a : letters_) s.push_back(letter_to_char(a));
        return s;
    }

    friend bool operator==(const FiniteWord& x, const FiniteWord& y) {
        return x.alphabet_ == y.alphabet_ && x.letters_ == y.letters_;
    }
    // Lexicographic on letters; alphabet size as tiebreaker so ordering is total.
    friend auto operator<=>(const FiniteWord& x, const FiniteWord& y) {
        if (auto c = x.letters_ <=> y.letters_; c != 0) return c;
        return x.alphabet_ <=> y.alphabet_;
    }

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

}  // namespace orbitwords
