#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "revpat/errors.hpp"

namespace revpat {

/// One pattern position: a variable, possibly read reversed.
struct PatternSymbol {
    int var = 0;
    bool reversed = false;

    friend bool operator==(const PatternSymbol&, const PatternSymbol&) = default;
    friend auto operator<=>(const PatternSymbol&, const PatternSymbol&) = default;
};

/*
 * A non-empty pattern over variables with reversal marks.
 *
 * Variables are always numbered densely by first occurrence, so two
 * patterns that differ only by a renaming of variables compare equal.
 * Text notation: lowercase letter = variable, uppercase = its reversal.
 */
class Pattern {
public:
    explicit Pattern(std::vector<PatternSymbol> positions) : positions_(std::move(positions)) {
        if (positions_.empty())
            throw DomainError("pattern must be non-empty");
        densify();
    }

    static Pattern parse(std::string_view text) {
        if (text.empty())
            throw ParseError("empty pattern");
        std::vector<PatternSymbol> out;
        for (char c : text) {
            if (c >= 'a' && c <= 'z')
                out.push_back({c - 'a', false});
            else if (c >= 'A' && c <= 'Z')
                out.push_back({c - 'A', true});
            else
                throw ParseError(std::string("illegal character '") + c + "' in pattern");
        }
        return Pattern(std::move(out));
    }

    std::size_t size() const noexcept { return positions_.size(); }
    int variable_count() const noexcept { return variable_count_; }
    const PatternSymbol& operator[](std::size_t i) const noexcept { return positions_[i]; }
    const std::vector<PatternSymbol>& positions() const noexcept { return positions_; }
    auto begin() const noexcept { return positions_.begin(); }
    auto end() const noexcept { return positions_.end(); }

    /// Number of positions holding variable v.
    std::size_t count(int v) const {
        return std::size_t(std::count_if(begin(), end(), [v](const PatternSymbol& s) { return s.var == v; }));
    }

    bool has_reversal() const {
        return std::any_of(begin(), end(), [](const PatternSymbol& s) { return s.reversed; });
    }

    std::string to_string() const {
        std::string s;
        for (const auto& p : positions_)
            s.push_back(char((p.reversed ? 'A' : 'a') + p.var));
        return s;
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.positions_ <=> b.positions_; }

private:
    void densify() {
        std::array<int, 26> rename;
        rename.fill(-1);
        int next = 0;
        for (auto& p : positions_) {
            if (p.var < 0 || p.var >= 26)
                throw DomainError("variable index out of range");
            if (rename[p.var] < 0)
                rename[p.var] = next++;
            p.var = rename[p.var];
        }
        variable_count_ = next;
    }

    std::vector<PatternSymbol> positions_;
    int variable_count_ = 0;
};

inline Pattern parse_pattern(std::string_view text) { return Pattern::parse(text); }
inline std::string format_pattern(const Pattern& p) { return p.to_string(); }

/// Mirror image: positions in reverse order, every reversal mark toggled.
inline Pattern reverse_pattern(const Pattern& p) {
    std::vector<PatternSymbol> out(p.positions().rbegin(), p.positions().rend());
    for (auto& s : out)
        s.reversed = !s.reversed;
    return Pattern(std::move(out));
}

/// True iff q is p under a bijective renaming of variables (marks preserved).
inline bool equivalent(const Pattern& p, const Pattern& q) { return p == q; }

/// Toggles the reversal mark on every occurrence of variable v. A word meets
/// the result iff it meets p (substitute the mirrored image for v).
inline Pattern toggle_variable(const Pattern& p, int v) {
    std::vector<PatternSymbol> out = p.positions();
    for (auto& s : out)
        if (s.var == v)
            s.reversed = !s.reversed;
    return Pattern(std::move(out));
}

/// The same pattern with every reversal mark removed.
inline Pattern underlying(const Pattern& p) {
    std::vector<PatternSymbol> out = p.positions();
    for (auto& s : out)
        s.reversed = false;
    return Pattern(std::move(out));
}

/// All 2^m - 1 ways to put at least one reversal mark on an unmarked pattern.
inline std::vector<Pattern> reversal_variants(const Pattern& base) {
    const std::size_t m = base.size();
    if (m > 20)
        throw DomainError("pattern too long for variant enumeration");
    std::vector<Pattern> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<PatternSymbol> pos = base.positions();
        for (std::size_t i = 0; i < m; ++i)
            pos[i].reversed = ((mask >> (m - 1 - i)) & 1) != 0;
        out.emplace_back(std::move(pos));
    }
    return out;
}

/*
 * Canonical representative of p's symmetry class: the least (lowercase first) of
 * every combination of mirror image and per-variable mark toggles. Each of
 * these operations preserves avoidability, so classification keys on it.
 */
inline Pattern canonical_form(const Pattern& p) {
    Pattern best = p;
    for (const Pattern& base : {p, reverse_pattern(p)}) {
        const int v = base.variable_count();
        for (int mask = 0; mask < (1 << v); ++mask) {
            Pattern q = base;
            for (int i = 0; i < v; ++i)
                if (mask & (1 << i))
                    q = toggle_variable(q, i);
            if (q < best)
                best = q;
        }
    }
    return best;
}

} // namespace revpat
