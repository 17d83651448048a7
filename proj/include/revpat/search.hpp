#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "revpat/errors.hpp"
#include "revpat/matcher.hpp"
#include "revpat/pattern.hpp"
#include "revpat/word.hpp"

namespace revpat {

/// Largest number of words any exhaustive enumeration may visit.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 26;

/// Every word of length `bound` meets the pattern; some word of length bound-1 avoids it.
struct Unavoidable {
    std::size_t bound = 0;
};

/// The search reached max_depth. Not a proof of avoidability.
struct DepthExhausted {
    Word witness;
};

struct SearchOutcome {
    Pattern pattern;
    int alphabet_size;
    std::variant<Unavoidable, DepthExhausted> verdict;
    std::uint64_t nodes_explored = 0;
    double wall_time_ms = 0;

    bool unavoidable() const noexcept { return std::holds_alternative<Unavoidable>(verdict); }
    std::size_t bound() const { return std::get<Unavoidable>(verdict).bound; }
    const Word& witness() const { return std::get<DepthExhausted>(verdict).witness; }

    std::string verdict_label() const { return unavoidable() ? "unavoidable" : "depth-exhausted"; }
};

struct SearchOptions {
    /// Only explore words starting with letter 0 (sound by letter-permutation symmetry).
    bool fix_first_letter = true;
};

namespace detail {

inline void check_alphabet(int k) {
    if (k < 1 || k > kMaxAlphabet)
        throw DomainError("alphabet size must be in [1, 10]");
}

inline std::uint64_t checked_power(int k, std::size_t L) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < L; ++i) {
        total *= std::uint64_t(k);
        if (total > kEnumerationGuard)
            throw ResourceError("enumeration of " + std::to_string(k) + "^" + std::to_string(L) +
                                " words exceeds the 2^26 guard");
    }
    return total;
}

/*
 * Depth-first walk of the tree of words avoiding p, letters in increasing
 * order. A node is pruned as soon as its last letter completes an
 * occurrence; all shorter prefixes are known to avoid p, so only
 * occurrences ending at the new position need checking.
 *
 * on_node(depth) is called for each avoiding word (the empty root included)
 * and returns true to stop the walk.
 */
template <class OnNode>
void walk_avoiders(const Pattern& p, int k, std::size_t max_depth, bool fix_first, std::vector<Symbol>& word,
                   OnNode&& on_node) {
    word.clear();
    if (on_node(std::size_t{0}))
        return;
    std::vector<int> next(max_depth + 1, 0);
    std::size_t depth = 0; // current word length
    while (true) {
        if (depth == max_depth) {
            // leaf at the depth limit: back up
            if (depth == 0)
                return;
            word.pop_back();
            --depth;
            continue;
        }
        const int limit = (fix_first && depth == 0) ? 1 : k;
        if (next[depth] >= limit) {
            next[depth] = 0;
            if (depth == 0)
                return;
            word.pop_back();
            --depth;
            continue;
        }
        word.push_back(Symbol(next[depth]++));
        if (occurrence_ending_at(word, word.size() - 1, p)) {
            word.pop_back();
            continue;
        }
        ++depth;
        if (on_node(depth))
            return;
    }
}

} // namespace detail

/*
 * Backtracking search for long words over k letters avoiding p. A finite
 * tree certifies k-unavoidability with the exact bound; otherwise the
 * lexicographically least avoiding word of length max_depth is returned.
 */
inline SearchOutcome search(const Pattern& p, int k, std::size_t max_depth, SearchOptions opts = {}) {
    detail::check_alphabet(k);
    if (max_depth < 1)
        throw DomainError("max_depth must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Symbol> word;
    std::uint64_t nodes = 0;
    std::size_t longest = 0;
    std::optional<Word> witness;
    detail::walk_avoiders(p, k, max_depth, opts.fix_first_letter, word, [&](std::size_t depth) {
        ++nodes;
        longest = std::max(longest, depth);
        if (depth == max_depth) {
            witness = Word(word, k);
            return true;
        }
        return false;
    });
    SearchOutcome out{p, k, Unavoidable{longest + 1}, nodes, 0};
    if (witness)
        out.verdict = DepthExhausted{*witness};
    out.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

/// True iff every word of length L over k letters meets p (plain enumeration).
inline bool exhaustive_unavoidability(const Pattern& p, int k, std::size_t L) {
    detail::check_alphabet(k);
    const std::uint64_t total = detail::checked_power(k, L);
    std::vector<Symbol> digits(L, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (!meets(Word(digits, k), p))
            return false;
        for (std::size_t j = L; j-- > 0;) {
            if (++digits[j] < k)
                break;
            digits[j] = 0;
        }
    }
    return true;
}

/// c_0..c_{n_max}, c_n = number of words of length n over k letters avoiding p.
inline std::vector<std::uint64_t> count_avoiders(const Pattern& p, int k, std::size_t n_max) {
    detail::check_alphabet(k);
    std::vector<std::uint64_t> counts(n_max + 1, 0);
    std::uint64_t visited = 0;
    std::vector<Symbol> word;
    // Avoiding words starting with each letter are equinumerous, so walk
    // the 0-subtree and scale.
    detail::walk_avoiders(p, k, n_max, true, word, [&](std::size_t depth) {
        if (++visited > kEnumerationGuard)
            throw ResourceError("avoider tree exceeds the 2^26 node guard");
        ++counts[depth];
        return false;
    });
    for (std::size_t n = 1; n <= n_max; ++n)
        counts[n] *= std::uint64_t(k);
    return counts;
}

struct IndexEstimate {
    int lower_bound = 1;          // 1 + largest k (contiguous from 1) certified unavoidable
    std::optional<int> candidate; // least k where the search reached the depth limit
    std::size_t depth_used = 0;
    std::vector<SearchOutcome> runs;
};

/// Runs search for k = 1, 2, ... up to k_max, stopping at the first depth-exhausted k.
inline IndexEstimate estimate_index(const Pattern& p, int k_max, std::size_t depth) {
    if (k_max < 1)
        throw DomainError("k_max must be >= 1");
    IndexEstimate est;
    est.depth_used = depth;
    bool contiguous = true;
    for (int k = 1; k <= k_max; ++k) {
        SearchOutcome o = search(p, k, depth);
        const bool unav = o.unavoidable();
        est.runs.push_back(std::move(o));
        if (unav) {
            if (contiguous)
                est.lower_bound = k + 1;
        } else {
            contiguous = false;
            est.candidate = k;
            break;
        }
    }
    return est;
}

} // namespace revpat
