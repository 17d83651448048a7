#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revpat/detail/backtrack.hpp"
#include "revpat/detail/suffix_index.hpp"
#include "revpat/errors.hpp"
#include "revpat/generators.hpp"
#include "revpat/pattern.hpp"
#include "revpat/word.hpp"

namespace revpat {

/// Variable -> non-empty image (the image read at an unmarked position).
using Assignment = std::map<int, Word>;

struct Occurrence {
    std::size_t start = 0;
    std::size_t end = 0; // exclusive
    Assignment assignment;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Applies the assignment to the pattern, mirroring images at marked positions.
inline Word instantiate(const Pattern& p, const Assignment& a) {
    std::vector<Symbol> out;
    int alphabet = 2;
    for (const auto& sym : p) {
        auto it = a.find(sym.var);
        if (it == a.end() || it->second.empty())
            throw DomainError("assignment misses variable " + std::to_string(sym.var));
        const Word& img = it->second;
        alphabet = std::max(alphabet, img.alphabet_size());
        if (sym.reversed)
            out.insert(out.end(), img.symbols().rbegin(), img.symbols().rend());
        else
            out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), alphabet);
}

/// `start end a=image b=image ...`
inline std::string format_occurrence(const Occurrence& occ) {
    std::ostringstream os;
    os << occ.start << ' ' << occ.end;
    for (const auto& [var, img] : occ.assignment)
        os << ' ' << char('a' + var) << '=' << img.to_string();
    return os.str();
}

namespace detail {

inline void require_pattern(const Pattern& p) {
    if (p.size() == 0)
        throw DomainError("empty pattern");
}

template <class Matcher>
Occurrence occurrence_from(const Word& w, const Pattern& p, std::size_t start, std::size_t end, const Matcher& m) {
    Occurrence occ{start, end, {}};
    for (int v = 0; v < p.variable_count(); ++v) {
        const std::size_t len = m.images()[std::size_t(v)].len;
        std::vector<Symbol> img(len);
        for (std::size_t j = 0; j < len; ++j)
            img[j] = m.image_at(v, j);
        occ.assignment.emplace(v, Word(std::move(img), w.alphabet_size()));
    }
    return occ;
}

// Ordering among occurrences sharing a start: shorter first, then
// lexicographically least image of variable 0, then variable 1, ...
inline bool preferred(const Occurrence& a, const Occurrence& b) {
    if (a.end != b.end)
        return a.end < b.end;
    return a.assignment < b.assignment;
}

/*
 * Whole-word matcher for patterns with at most two variables.
 *
 * For a fixed start s and alpha length a, candidate beta lengths come either
 * from the occurrence list of alpha's image (read off the suffix array when
 * that list is short) or from a scan that jumps straight to the next b whose
 * forced boundary letters agree. Every candidate is then confirmed with O(1)
 * LCE queries per pattern position.
 */
class IndexedMatcher {
public:
    static constexpr std::size_t kOccurrenceCap = 512;
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    IndexedMatcher(const Word& w, const Pattern& p) : w_(w), p_(p), n_(w.size()), index_(w.symbols()) {
        if (p.variable_count() > 2)
            throw UnsupportedError("indexed matcher supports at most two variables");
        const std::size_t m = p.size();
        alpha_before_.resize(m);
        beta_before_.resize(m);
        std::size_t ca = 0, cb = 0;
        for (std::size_t k = 0; k < m; ++k) {
            alpha_before_[k] = ca;
            beta_before_[k] = cb;
            if (p[k].var == 0)
                ++ca;
            else
                ++cb;
        }
        count_alpha_ = ca;
        count_beta_ = cb;
        first_beta_ = m;
        for (std::size_t k = 0; k < m; ++k)
            if (p[k].var == 1) {
                first_beta_ = k;
                break;
            }
        for (std::size_t k = first_beta_; k < m; ++k)
            if (p[k].var == 0) {
                anchor_ = k;
                break;
            }
        for (std::size_t k = 1; k < m; ++k)
            if (p[k].var == 0 && p[k].reversed != p[0].reversed)
                need_mirror_ = true;
        for (std::size_t k = first_beta_ + 1; k < m; ++k)
            if (p[k].var == 1 && p[k - 1].var == 1 && p[k].reversed != p[k - 1].reversed)
                doubled_at_.push_back(k);
        if (count_beta_ > 0)
            build_jump_tables();
    }

    /// Visits (a, b) for every occurrence starting at s, by increasing a then b.
    /// b is 0 for unary patterns. Returns true if the visitor stopped early.
    template <class Visit>
    bool at_start(std::size_t s, Visit&& visit) const {
        auto iv = index_.all();
        const std::size_t beta_min = count_beta_ > 0 ? count_beta_ : 0;
        for (std::size_t a = 1; s + count_alpha_ * a + beta_min <= n_; ++a) {
            iv = index_.narrow(iv, w_[s + a - 1]);
            if (need_mirror_ && index_.mirrored_count(iv) == 0)
                break; // mirror of w[s, s+a) is not a factor; longer a cannot help
            if (!alpha_prefix_ok(s, a))
                continue;
            if (count_beta_ == 0) {
                if (visit(a, std::size_t{0}))
                    return true;
                continue;
            }
            if (beta_lengths(s, a, iv, visit))
                return true;
        }
        return false;
    }

    /// True if w[s..) also occurs at some earlier position, in which case
    /// every occurrence starting at s has an identical copy further left.
    bool suffix_seen_earlier(std::size_t s) const {
        const std::size_t need = n_ - s;
        const std::size_t r = index_.rank_of(s);
        for (std::size_t q = r; q-- > 0;) {
            if (index_.lce(index_.suffix_at(q), s) < need)
                break;
            if (index_.suffix_at(q) < s)
                return true;
        }
        for (std::size_t q = r + 1; q < index_.text_size(); ++q) {
            if (index_.lce(index_.suffix_at(q), s) < need)
                break;
            if (index_.suffix_at(q) < s)
                return true;
        }
        return false;
    }

    std::size_t occurrence_end(std::size_t s, std::size_t a, std::size_t b) const {
        return s + count_alpha_ * a + count_beta_ * b;
    }

    Occurrence make_occurrence(std::size_t s, std::size_t a, std::size_t b) const {
        Occurrence occ{s, occurrence_end(s, a, b), {}};
        occ.assignment.emplace(0, canonical_image(s, a, p_[0].reversed));
        if (count_beta_ > 0)
            occ.assignment.emplace(1, canonical_image(start_of(first_beta_, s, a, b), b, p_[first_beta_].reversed));
        return occ;
    }

private:
    struct Condition {
        std::size_t base;   // position at b = 0
        std::size_t stride; // advance per unit of b
        Symbol letter;
    };

    Word canonical_image(std::size_t pos, std::size_t len, bool stored_reversed) const {
        Word f = w_.factor(pos, len);
        return stored_reversed ? f.reversed() : f;
    }

    std::size_t start_of(std::size_t k, std::size_t s, std::size_t a, std::size_t b) const {
        return s + alpha_before_[k] * a + beta_before_[k] * b;
    }

    // alpha positions preceding the first beta sit at s + k*a.
    bool alpha_prefix_ok(std::size_t s, std::size_t a) const {
        for (std::size_t k = 1; k < first_beta_; ++k)
            if (!same_image(s, k == 0 ? s : s + k * a, a, p_[k].reversed == p_[0].reversed))
                return false;
        return true;
    }

    bool same_image(std::size_t ref, std::size_t x, std::size_t len, bool same_orientation) const {
        return same_orientation ? index_.equal(ref, x, len) : index_.equal_reversed(ref, x, len);
    }

    bool full_check(std::size_t s, std::size_t a, std::size_t b) const {
        const std::size_t t0 = start_of(first_beta_, s, a, b);
        for (std::size_t k = first_beta_ + 1; k < p_.size(); ++k) {
            const std::size_t x = start_of(k, s, a, b);
            const bool ok = p_[k].var == 0 ? same_image(s, x, a, p_[k].reversed == p_[0].reversed)
                                           : same_image(t0, x, b, p_[k].reversed == p_[first_beta_].reversed);
            if (!ok)
                return false;
        }
        return true;
    }

    template <class Visit>
    bool beta_lengths(std::size_t s, std::size_t a, const detail::SuffixIndex::Interval& iv, Visit& visit) const {
        const std::size_t used = s + count_alpha_ * a;
        const std::size_t b_max = (n_ - used) / count_beta_;
        if (b_max == 0)
            return false;
        if (anchor_ < p_.size() && doubled_at_.empty()) {
            const bool mirrored = p_[anchor_].reversed != p_[0].reversed;
            const std::size_t total = iv.size();
            if (total <= kOccurrenceCap) {
                const std::size_t base = s + alpha_before_[anchor_] * a;
                const std::size_t stride = beta_before_[anchor_];
                std::vector<std::size_t> bs;
                for (std::size_t r = iv.lo; r < iv.hi; ++r) {
                    const std::size_t t = index_.suffix_at(r);
                    std::size_t q;
                    if (t < n_) {
                        if (mirrored)
                            continue;
                        q = t;
                    } else {
                        if (!mirrored)
                            continue;
                        q = n_ - (t - n_ - 1) - a; // w^R occurrence -> mirrored occurrence in w
                    }
                    if (q <= base || (q - base) % stride != 0)
                        continue;
                    const std::size_t b = (q - base) / stride;
                    if (b >= 1 && b <= b_max)
                        bs.push_back(b);
                }
                std::sort(bs.begin(), bs.end());
                for (std::size_t b : bs)
                    if (full_check(s, a, b) && visit(a, b))
                        return true;
                return false;
            }
        }
        return scan(s, a, b_max, visit);
    }

    template <class Visit>
    bool scan(std::size_t s, std::size_t a, std::size_t b_max, Visit& visit) const {
        Condition conds[32];
        std::size_t nc = 0;
        const std::size_t t0 = s + first_beta_ * a;
        // beta next to its mirror image: equal letters across the junction (rare, so tested first)
        for (std::size_t k : doubled_at_)
            if (nc < 8)
                conds[nc++] = {s + alpha_before_[k] * a - 1, beta_before_[k], doubled_letter()};
        for (std::size_t k = first_beta_ + 1; k < p_.size() && nc + 2 <= 32; ++k) {
            const std::size_t base = s + alpha_before_[k] * a;
            const std::size_t stride = beta_before_[k];
            if (p_[k].var == 0) {
                const bool same = p_[k].reversed == p_[0].reversed;
                conds[nc++] = {base, stride, same ? w_[s] : w_[s + a - 1]};
                conds[nc++] = {base + a - 1, stride, same ? w_[s + a - 1] : w_[s]};
            } else if (p_[k].reversed == p_[first_beta_].reversed) {
                conds[nc++] = {base, stride, w_[t0]};
            } else {
                // mirrored beta: its last letter is beta's first letter
                conds[nc++] = {base - 1, stride + 1, w_[t0]};
            }
        }
        std::size_t b = 1;
        while (b <= b_max) {
            bool moved = false;
            for (std::size_t i = 0; i < nc; ++i) {
                const Condition& c = conds[i];
                const std::size_t x = c.base + c.stride * b;
                if (x >= n_)
                    return false;
                const std::size_t y = next_letter(c.letter, c.stride, x);
                if (y == kNone)
                    return false;
                if (y != x) {
                    b += (y - x) / c.stride;
                    moved = true;
                    break;
                }
            }
            if (moved)
                continue;
            if (full_check(s, a, b) && visit(a, b))
                return true;
            ++b;
        }
        return false;
    }

    // Pseudo-letter matching every y with w[y] == w[y+1].
    Symbol doubled_letter() const { return Symbol(w_.alphabet_size()); }

    // smallest y >= x with y = x (mod stride) and w[y] == letter
    std::size_t next_letter(Symbol letter, std::size_t stride, std::size_t x) const {
        return jump_[(std::size_t(letter) * max_stride_ + stride - 1) * n_ + x];
    }

    void build_jump_tables() {
        max_stride_ = count_beta_ + 1;
        const std::size_t k = std::size_t(w_.alphabet_size());
        jump_.assign((k + 1) * max_stride_ * n_, kNone);
        auto holds = [&](std::size_t c, std::size_t x) {
            return c < k ? w_[x] == c : x + 1 < n_ && w_[x] == w_[x + 1];
        };
        for (std::size_t c = 0; c <= k; ++c)
            for (std::size_t st = 1; st <= max_stride_; ++st) {
                std::size_t* row = &jump_[(c * max_stride_ + st - 1) * n_];
                for (std::size_t x = n_; x-- > 0;)
                    row[x] = holds(c, x) ? x : (x + st < n_ ? row[x + st] : kNone);
            }
    }

    const Word& w_;
    const Pattern& p_;
    std::size_t n_;
    detail::SuffixIndex index_;
    std::vector<std::size_t> alpha_before_, beta_before_;
    std::size_t count_alpha_ = 0, count_beta_ = 0;
    std::size_t first_beta_ = 0;
    std::size_t anchor_ = std::numeric_limits<std::size_t>::max();
    bool need_mirror_ = false;
    std::size_t max_stride_ = 1;
    std::vector<std::size_t> jump_;
    std::vector<std::size_t> doubled_at_; // positions k where beta meets its mirror at k-1
};

// Below this length the plain backtracking matcher beats building an index.
inline constexpr std::size_t kIndexThreshold = 48;

inline std::optional<Occurrence> find_backtracking(const Word& w, const Pattern& p) {
    BacktrackMatcher<Word> m(w, p);
    for (std::size_t s = 0; s < w.size(); ++s) {
        std::optional<Occurrence> best;
        m.from_left(s, w.size(), [&](std::size_t st, std::size_t e, const auto& mm) {
            Occurrence occ = occurrence_from(w, p, st, e, mm);
            if (!best || preferred(occ, *best))
                best = std::move(occ);
            return false;
        });
        if (best)
            return best;
    }
    return std::nullopt;
}

inline std::optional<Occurrence> find_indexed(const Word& w, const Pattern& p) {
    IndexedMatcher m(w, p);
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (m.suffix_seen_earlier(s))
            continue;
        std::optional<Occurrence> best;
        std::size_t best_end = std::numeric_limits<std::size_t>::max();
        m.at_start(s, [&](std::size_t a, std::size_t b) {
            const std::size_t e = m.occurrence_end(s, a, b);
            if (e > best_end)
                return false;
            Occurrence occ = m.make_occurrence(s, a, b);
            if (!best || preferred(occ, *best)) {
                best = std::move(occ);
                best_end = e;
            }
            return false;
        });
        if (best)
            return best;
    }
    return std::nullopt;
}

} // namespace detail

/*
 * Deterministic witness of p in w: leftmost start, then shortest, then the
 * lexicographically least image of the first variable, then the second.
 */
inline std::optional<Occurrence> find_occurrence(const Word& w, const Pattern& p) {
    detail::require_pattern(p);
    if (w.size() < detail::kIndexThreshold || p.variable_count() > 2)
        return detail::find_backtracking(w, p);
    return detail::find_indexed(w, p);
}

inline bool meets(const Word& w, const Pattern& p) { return find_occurrence(w, p).has_value(); }

inline bool avoids(const Word& w, const Pattern& p) { return !meets(w, p); }

/// Number of distinct (start, end, assignment) triples.
inline std::size_t count_occurrences(const Word& w, const Pattern& p) {
    detail::require_pattern(p);
    detail::BacktrackMatcher<Word> m(w, p);
    std::size_t count = 0;
    for (std::size_t s = 0; s < w.size(); ++s)
        m.from_left(s, w.size(), [&](std::size_t, std::size_t, const auto&) {
            ++count;
            return false;
        });
    return count;
}

/// All occurrences, ordered by start, then end, then assignment.
inline std::vector<Occurrence> list_occurrences(const Word& w, const Pattern& p) {
    detail::require_pattern(p);
    detail::BacktrackMatcher<Word> m(w, p);
    std::vector<Occurrence> out;
    for (std::size_t s = 0; s < w.size(); ++s)
        m.from_left(s, w.size(), [&](std::size_t st, std::size_t e, const auto& mm) {
            out.push_back(detail::occurrence_from(w, p, st, e, mm));
            return false;
        });
    std::stable_sort(out.begin(), out.end(), [](const Occurrence& a, const Occurrence& b) {
        return a.start != b.start ? a.start < b.start : detail::preferred(a, b);
    });
    return out;
}

/// Does some occurrence of p end exactly at position i (inclusive)?
template <class Text>
bool occurrence_ending_at(const Text& w, std::size_t i, const Pattern& p) {
    detail::require_pattern(p);
    if (i >= w.size())
        throw DomainError("position out of range");
    detail::BacktrackMatcher<Text> m(w, p);
    return m.from_right(i + 1, 0, [](std::size_t, std::size_t, const auto&) { return true; });
}

struct StreamCheck {
    bool avoids = true;
    std::optional<Occurrence> violation; // leftmost occurrence when !avoids
    std::size_t checked_length = 0;
};

/// Checks the length-n prefix of a registered generator against p.
inline StreamCheck stream_avoids(std::string_view generator, const Pattern& p, std::size_t n) {
    if (n < 1)
        throw DomainError("prefix length must be >= 1");
    const Word w = generate(generator, std::int64_t(n));
    auto occ = find_occurrence(w, p);
    return {!occ.has_value(), std::move(occ), n};
}

/*
 * p divides q when q, read as a word over marked variables, contains an
 * image of p under a substitution of non-empty patterns for p's variables;
 * a marked position takes the mirror image (order reversed, marks toggled).
 */
inline bool divides(const Pattern& p, const Pattern& q) {
    std::vector<int> text;
    text.reserve(q.size());
    for (const auto& s : q)
        text.push_back(2 * s.var + (s.reversed ? 1 : 0));
    auto toggle = [](int c) { return c ^ 1; };
    detail::BacktrackMatcher<std::vector<int>, decltype(toggle)> m(text, p, toggle);
    for (std::size_t s = 0; s < text.size(); ++s)
        if (m.from_left(s, text.size(), [](std::size_t, std::size_t, const auto&) { return true; }))
            return true;
    return false;
}

} // namespace revpat
