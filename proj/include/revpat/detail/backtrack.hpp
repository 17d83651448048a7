#pragma once

#include <cstddef>
#include <vector>

#include "revpat/pattern.hpp"

namespace revpat::detail {

/// Where a variable's image was first read: text[pos, pos+len), mirrored if
/// that first occurrence carried a reversal mark.
struct ImageRef {
    std::size_t pos = 0;
    std::size_t len = 0;
    bool stored_reversed = false;
};

struct IdentityInvolution {
    template <class T>
    constexpr T operator()(T x) const noexcept {
        return x;
    }
};

/*
 * Position-by-position backtracking matcher over an arbitrary random-access
 * text. `Inv` is the letter involution applied when a factor is mirrored:
 * identity for words over digits, mark-toggle for patterns read as words.
 *
 * The visitor receives (start, end, images) and returns true to stop.
 */
template <class Text, class Inv = IdentityInvolution>
class BacktrackMatcher {
public:
    BacktrackMatcher(const Text& text, const Pattern& p, Inv inv = {})
        : text_(text), p_(p), inv_(inv), images_(std::size_t(p.variable_count())),
          assigned_(std::size_t(p.variable_count()), false) {}

    /// Occurrences starting at `start` and ending at or before `limit`.
    template <class Visit>
    bool from_left(std::size_t start, std::size_t limit, Visit&& visit) {
        start_ = start;
        bound_ = limit;
        return left(0, start, visit);
    }

    /// Occurrences ending exactly at `end` and starting at or after `floor`.
    template <class Visit>
    bool from_right(std::size_t end, std::size_t floor, Visit&& visit) {
        end_ = end;
        bound_ = floor;
        return right(p_.size(), end, visit);
    }

    // Canonical image letter j of variable v (its unmirrored reading).
    auto image_at(int v, std::size_t j) const {
        const ImageRef& r = images_[std::size_t(v)];
        return r.stored_reversed ? inv_(text_[r.pos + r.len - 1 - j]) : text_[r.pos + j];
    }

    const std::vector<ImageRef>& images() const noexcept { return images_; }

private:
    // Does the factor at q read as variable v with reversal mark `rev`?
    bool matches(int v, bool rev, std::size_t q) const {
        const ImageRef& r = images_[std::size_t(v)];
        if (rev == r.stored_reversed) {
            for (std::size_t j = 0; j < r.len; ++j)
                if (!(text_[q + j] == text_[r.pos + j]))
                    return false;
        } else {
            for (std::size_t j = 0; j < r.len; ++j)
                if (!(text_[q + j] == inv_(text_[r.pos + r.len - 1 - j])))
                    return false;
        }
        return true;
    }

    // Minimum total length of positions in [from, to) with var v excluded,
    // and the number of positions in that range holding v.
    void demand(std::size_t from, std::size_t to, int v, std::size_t& others, std::size_t& same) const {
        others = same = 0;
        for (std::size_t k = from; k < to; ++k) {
            int x = p_[k].var;
            if (x == v)
                ++same;
            else
                others += assigned_[std::size_t(x)] ? images_[std::size_t(x)].len : 1;
        }
    }

    template <class Visit>
    bool left(std::size_t k, std::size_t cur, Visit& visit) {
        if (k == p_.size())
            return visit(start_, cur, static_cast<const BacktrackMatcher&>(*this));
        const auto sym = p_[k];
        const auto v = std::size_t(sym.var);
        if (assigned_[v]) {
            const std::size_t len = images_[v].len;
            if (cur + len > bound_ || !matches(sym.var, sym.reversed, cur))
                return false;
            return left(k + 1, cur + len, visit);
        }
        std::size_t others, same;
        demand(k + 1, p_.size(), sym.var, others, same);
        if (cur + others >= bound_)
            return false;
        const std::size_t room = bound_ - cur - others;
        assigned_[v] = true;
        for (std::size_t len = 1; len * (same + 1) <= room; ++len) {
            images_[v] = {cur, len, sym.reversed};
            if (left(k + 1, cur + len, visit)) {
                assigned_[v] = false;
                return true;
            }
        }
        assigned_[v] = false;
        return false;
    }

    template <class Visit>
    bool right(std::size_t k, std::size_t cur, Visit& visit) {
        if (k == 0)
            return visit(cur, end_, static_cast<const BacktrackMatcher&>(*this));
        const auto sym = p_[k - 1];
        const auto v = std::size_t(sym.var);
        if (assigned_[v]) {
            const std::size_t len = images_[v].len;
            if (cur < bound_ + len || !matches(sym.var, sym.reversed, cur - len))
                return false;
            return right(k - 1, cur - len, visit);
        }
        std::size_t others, same;
        demand(0, k - 1, sym.var, others, same);
        if (cur < bound_ + others)
            return false;
        const std::size_t room = cur - bound_ - others;
        assigned_[v] = true;
        for (std::size_t len = 1; len * (same + 1) <= room; ++len) {
            images_[v] = {cur - len, len, sym.reversed};
            if (right(k - 1, cur - len, visit)) {
                assigned_[v] = false;
                return true;
            }
        }
        assigned_[v] = false;
        return false;
    }

    const Text& text_;
    const Pattern& p_;
    Inv inv_;
    std::vector<ImageRef> images_;
    std::vector<bool> assigned_;
    std::size_t start_ = 0, end_ = 0, bound_ = 0;
};

} // namespace revpat::detail
