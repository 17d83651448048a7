#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "revpat/errors.hpp"
#include "revpat/word.hpp"

namespace revpat {

struct SquareOccurrence {
    std::size_t position;
    Word root;

    friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// All squares rr with |r| >= min_root_len, ordered by position then root length.
inline std::vector<SquareOccurrence> list_squares(const Word& w, std::size_t min_root_len = 1) {
    if (min_root_len < 1)
        throw DomainError("min_root_len must be >= 1");
    struct Hit {
        std::size_t pos, len;
    };
    std::vector<Hit> hits;
    const std::size_t n = w.size();
    for (std::size_t r = min_root_len; 2 * r <= n; ++r) {
        // run = number of consecutive i' >= i with w[i'] == w[i'+r]
        std::size_t run = 0;
        for (std::size_t i = n - r; i-- > 0;) {
            run = (w[i] == w[i + r]) ? run + 1 : 0;
            if (run >= r && i + 2 * r <= n)
                hits.push_back({i, r});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return a.pos != b.pos ? a.pos < b.pos : a.len < b.len;
    });
    std::vector<SquareOccurrence> out;
    out.reserve(hits.size());
    for (const Hit& h : hits)
        out.push_back({h.pos, w.factor(h.pos, h.len)});
    return out;
}

/// Distinct roots of the squares occurring in w.
inline std::set<Word> square_roots(const Word& w, std::size_t min_root_len = 1) {
    std::set<Word> roots;
    for (auto& sq : list_squares(w, min_root_len))
        roots.insert(sq.root);
    return roots;
}

enum class Parity { all, even, odd };

struct PalindromeOccurrence {
    std::size_t position;
    std::size_t length;

    friend bool operator==(const PalindromeOccurrence&, const PalindromeOccurrence&) = default;
};

namespace detail {

// Manacher: radius[c] for the 2n+1 centers of the interleaved word, measured
// as the length of the longest palindrome centered there.
inline std::vector<std::size_t> palindrome_lengths(const Word& w) {
    const std::size_t n = w.size();
    const std::size_t m = 2 * n + 1;
    std::vector<std::size_t> len(m, 0);
    auto at = [&](std::size_t i) -> int { return (i % 2 == 0) ? -1 : int(w[i / 2]); };
    std::size_t center = 0, right = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = 0;
        if (i < right)
            r = std::min(right - i, len[2 * center - i]);
        while (i >= r + 1 && i + r + 1 < m && at(i - r - 1) == at(i + r + 1))
            ++r;
        len[i] = r;
        if (i + r > right) {
            center = i;
            right = i + r;
        }
    }
    return len;
}

} // namespace detail

/// All palindromic factor occurrences of length >= min_len matching the parity
/// filter, ordered by position then length.
inline std::vector<PalindromeOccurrence> list_palindromes(const Word& w, std::size_t min_len = 1,
                                                          Parity parity = Parity::all) {
    if (min_len < 1)
        throw DomainError("min_len must be >= 1");
    std::vector<PalindromeOccurrence> out;
    const auto radius = detail::palindrome_lengths(w);
    for (std::size_t c = 0; c < radius.size(); ++c) {
        // palindromes centered at c have lengths radius[c], radius[c]-2, ...
        bool even_center = (c % 2 == 0);
        if (parity == Parity::even && !even_center)
            continue;
        if (parity == Parity::odd && even_center)
            continue;
        for (std::size_t l = radius[c]; l >= std::max<std::size_t>(min_len, 1) && l > 0; l -= 2) {
            out.push_back({(c - l) / 2, l});
            if (l < 2)
                break;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.position != b.position ? a.position < b.position : a.length < b.length;
    });
    return out;
}

/// Largest l such that some letter a has a^l as a factor.
inline std::size_t max_unary_power(const Word& w) {
    if (w.empty())
        throw DomainError("max_unary_power of the empty word");
    std::size_t best = 1, run = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        run = (w[i] == w[i - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

/// Number of distinct length-n factors.
inline std::size_t factor_complexity(const Word& w, std::size_t n) {
    if (n < 1 || n > w.size())
        throw DomainError("factor length " + std::to_string(n) + " out of range for word of length " +
                          std::to_string(w.size()));
    std::unordered_set<std::string> seen;
    std::string s = w.to_string();
    for (std::size_t i = 0; i + n <= s.size(); ++i)
        seen.insert(s.substr(i, n));
    return seen.size();
}

/*
 * Morse-Hedlund evidence on a finite prefix.
 *
 * An infinite word is ultimately periodic iff p(n) <= n for some n. On a
 * prefix the counts only lower-bound the true complexity, so a periodic
 * verdict here is reliable while an aperiodic one is evidence only.
 */
struct PeriodicityEvidence {
    enum class Kind { periodic, aperiodic };
    Kind kind;
    std::size_t n; // witnessing n for periodic, n_max for aperiodic

    bool periodic() const noexcept { return kind == Kind::periodic; }
    std::string to_string() const {
        return std::string(periodic() ? "PERIODIC-EVIDENCE(" : "APERIODIC-EVIDENCE(") + std::to_string(n) + ")";
    }
    friend bool operator==(const PeriodicityEvidence&, const PeriodicityEvidence&) = default;
};

inline PeriodicityEvidence morse_hedlund_evidence(const Word& w, std::size_t n_max) {
    if (n_max < 1)
        throw DomainError("n_max must be >= 1");
    if (w.size() < 2 * n_max)
        throw DomainError("prefix too short: need length >= 2*n_max");
    for (std::size_t n = 1; n <= n_max; ++n)
        if (factor_complexity(w, n) <= n)
            return {PeriodicityEvidence::Kind::periodic, n};
    return {PeriodicityEvidence::Kind::aperiodic, n_max};
}

} // namespace revpat
