#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revpat/errors.hpp"

namespace revpat {

using Symbol = std::uint8_t;

/// Largest alphabet representable in the one-digit-per-letter text format.
inline constexpr int kMaxAlphabet = 10;

/*
 * A finite word over the alphabet {0, ..., alphabet_size-1}.
 *
 * Immutable once built: every mutating helper returns a new Word. The
 * empty word is allowed and carries an alphabet like any other word.
 */
class Word {
public:
    Word() = default;

    explicit Word(std::vector<Symbol> symbols, int alphabet_size = kMaxAlphabet)
        : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
        if (alphabet_size_ < 1 || alphabet_size_ > kMaxAlphabet)
            throw DomainError("alphabet size must be in [1, 10], got " + std::to_string(alphabet_size_));
        for (Symbol s : symbols_)
            if (s >= alphabet_size_)
                throw DomainError("symbol " + std::to_string(int(s)) + " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
    }

    Word(std::initializer_list<int> symbols, int alphabet_size)
        : Word(std::vector<Symbol>(symbols.begin(), symbols.end()), alphabet_size) {}

    /// Parses a string of ASCII digits. With alphabet_size == 0 the alphabet
    /// is inferred as (largest digit + 1), at least 2.
    static Word parse(std::string_view text, int alphabet_size = 0) {
        std::vector<Symbol> out;
        out.reserve(text.size());
        int top = 1;
        for (char c : text) {
            if (c < '0' || c > '9')
                throw ParseError(std::string("illegal character '") + c + "' in word");
            out.push_back(Symbol(c - '0'));
            top = std::max(top, c - '0' + 1);
        }
        return Word(std::move(out), alphabet_size == 0 ? std::max(top, 2) : alphabet_size);
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    int alphabet_size() const noexcept { return alphabet_size_; }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    Word factor(std::size_t pos, std::size_t len) const {
        if (pos > size() || len > size() - pos)
            throw DomainError("factor out of range");
        return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len), alphabet_size_);
    }

    Word prefix(std::size_t len) const { return factor(0, std::min(len, size())); }

    Word reversed() const {
        return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()), alphabet_size_);
    }

    bool is_palindrome() const { return std::equal(begin(), begin() + size() / 2, symbols_.rbegin()); }

    std::string to_string() const {
        std::string s;
        s.reserve(size());
        for (Symbol c : symbols_)
            s.push_back(char('0' + c));
        return s;
    }

    friend Word operator+(const Word& u, const Word& v) {
        std::vector<Symbol> out(u.symbols_);
        out.insert(out.end(), v.symbols_.begin(), v.symbols_.end());
        return Word(std::move(out), std::max(u.alphabet_size_, v.alphabet_size_));
    }

    /// Equality compares letters only; the declared alphabet is metadata.
    friend bool operator==(const Word& u, const Word& v) { return u.symbols_ == v.symbols_; }
    friend auto operator<=>(const Word& u, const Word& v) { return u.symbols_ <=> v.symbols_; }

private:
    std::vector<Symbol> symbols_;
    int alphabet_size_ = kMaxAlphabet;
};

inline Word reverse(const Word& w) { return w.reversed(); }

inline Word power(const Word& w, std::size_t n) {
    Word out({}, w.alphabet_size());
    for (std::size_t i = 0; i < n; ++i)
        out = out + w;
    return out;
}

/*
 * A non-erasing morphism from a source alphabet into a target alphabet,
 * given by one non-empty image per source letter.
 */
class Morphism {
public:
    Morphism(std::vector<Word> images, int target_alphabet_size)
        : images_(std::move(images)), target_alphabet_size_(target_alphabet_size) {
        if (images_.empty())
            throw DomainError("morphism needs at least one image");
        for (const Word& img : images_) {
            if (img.empty())
                throw DomainError("morphism images must be non-empty");
            for (Symbol s : img)
                if (s >= target_alphabet_size_)
                    throw DomainError("image letter outside target alphabet");
        }
        std::size_t d = images_.front().size();
        bool uniform = std::all_of(images_.begin(), images_.end(), [d](const Word& w) { return w.size() == d; });
        if (uniform)
            width_ = d;
    }

    static Morphism from_strings(std::initializer_list<std::string_view> images, int target_alphabet_size) {
        std::vector<Word> out;
        for (auto s : images)
            out.push_back(Word::parse(s, target_alphabet_size));
        return Morphism(std::move(out), target_alphabet_size);
    }

    int source_alphabet_size() const noexcept { return int(images_.size()); }
    int target_alphabet_size() const noexcept { return target_alphabet_size_; }
    /// Common image length if the morphism is uniform.
    std::optional<std::size_t> uniform_width() const noexcept { return width_; }

    const Word& image(Symbol s) const {
        if (s >= images_.size())
            throw DomainError("symbol " + std::to_string(int(s)) + " has no image");
        return images_[s];
    }

    Word apply(const Word& w) const {
        std::vector<Symbol> out;
        if (width_)
            out.reserve(*width_ * w.size());
        for (Symbol s : w) {
            const Word& img = image(s);
            out.insert(out.end(), img.begin(), img.end());
        }
        return Word(std::move(out), target_alphabet_size_);
    }

    Word operator()(const Word& w) const { return apply(w); }

private:
    std::vector<Word> images_;
    int target_alphabet_size_;
    std::optional<std::size_t> width_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

/// 12-uniform ternary morphism mapping square-free words to words without
/// squares of period >= 2 and without palindromes of length >= 3.
inline const Morphism& psi12() {
    static const Morphism m = Morphism::from_strings({"011220012201", "122001120012", "200112201120"}, 3);
    return m;
}

/// 6-uniform morphism from 5 letters to binary; applied to the constrained
/// square-free base word it leaves only the squares 00, 11 and 0101.
inline const Morphism& psi6() {
    static const Morphism m = Morphism::from_strings({"011100", "101100", "111000", "110010", "110001"}, 2);
    return m;
}

} // namespace revpat
