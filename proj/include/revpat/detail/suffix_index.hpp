#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "revpat/word.hpp"

namespace revpat::detail {

/*
 * Suffix array of T = w # w^R with LCP and a sparse table, giving O(1)
 * longest-common-extension queries between any two suffixes of T. That
 * covers both "w[x..) vs w[y..)" and "w[y..) vs the mirror of w[..x)".
 */
class SuffixIndex {
public:
    static constexpr int kSeparator = 255;

    explicit SuffixIndex(std::span<const Symbol> w) : n_(w.size()) {
        text_.reserve(2 * n_ + 1);
        for (Symbol c : w)
            text_.push_back(c);
        text_.push_back(kSeparator);
        for (std::size_t i = n_; i-- > 0;)
            text_.push_back(w[i]);
        build_suffix_array();
        build_lcp();
        build_sparse_table();
        rev_before_.assign(text_.size() + 1, 0);
        for (std::size_t i = 0; i < text_.size(); ++i)
            rev_before_[i + 1] = rev_before_[i] + (sa_[i] > n_ ? 1 : 0);
    }

    std::size_t word_size() const noexcept { return n_; }
    std::size_t text_size() const noexcept { return text_.size(); }

    /// Longest common prefix of suffixes i and j of T.
    std::size_t lce(std::size_t i, std::size_t j) const {
        if (i == j)
            return text_.size() - i;
        std::size_t ri = rank_[i], rj = rank_[j];
        if (ri > rj)
            std::swap(ri, rj);
        return range_min(ri + 1, rj + 1);
    }

    /// w[x, x+len) == w[y, y+len)
    bool equal(std::size_t x, std::size_t y, std::size_t len) const { return x == y || lce(x, y) >= len; }

    /// w[y, y+len) == reverse(w[x, x+len))
    bool equal_reversed(std::size_t x, std::size_t y, std::size_t len) const {
        return lce(y, mirror_start(x, len)) >= len;
    }

    /// Start in T of reverse(w[x, x+len)) inside the w^R half.
    std::size_t mirror_start(std::size_t x, std::size_t len) const { return 2 * n_ + 1 - x - len; }

    /// Contiguous block of suffix-array ranks whose suffixes share a prefix.
    struct Interval {
        std::size_t lo, hi, depth;
        std::size_t size() const noexcept { return hi - lo; }
    };

    Interval all() const { return {0, text_.size(), 0}; }

    /// Restricts iv to suffixes whose next letter (at iv.depth) is c.
    Interval narrow(Interval iv, Symbol c) const {
        auto key = [&](std::size_t r) -> int {
            std::size_t p = sa_[r] + iv.depth;
            return p < text_.size() ? int(text_[p]) : -1;
        };
        std::size_t lo = iv.lo, hi = iv.hi;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (key(mid) < int(c))
                lo = mid + 1;
            else
                hi = mid;
        }
        std::size_t first = lo;
        hi = iv.hi;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (key(mid) <= int(c))
                lo = mid + 1;
            else
                hi = mid;
        }
        return {first, lo, iv.depth + 1};
    }

    /// Suffix start in T at a given rank.
    std::size_t suffix_at(std::size_t rank) const { return sa_[rank]; }
    std::size_t rank_of(std::size_t pos) const { return rank_[pos]; }

    /// Number of ranks in [iv.lo, iv.hi) whose suffix starts in the w^R half.
    std::size_t mirrored_count(const Interval& iv) const { return rev_before_[iv.hi] - rev_before_[iv.lo]; }

private:
    void build_suffix_array() {
        const std::size_t m = text_.size();
        sa_.resize(m);
        rank_.resize(m);
        std::iota(sa_.begin(), sa_.end(), std::size_t{0});
        std::vector<std::size_t> tmp(m);
        for (std::size_t i = 0; i < m; ++i)
            rank_[i] = text_[i];
        for (std::size_t k = 1;; k <<= 1) {
            auto key2 = [&](std::size_t i) -> long { return i + k < m ? long(rank_[i + k]) : -1L; };
            auto cmp = [&](std::size_t a, std::size_t b) {
                if (rank_[a] != rank_[b])
                    return rank_[a] < rank_[b];
                return key2(a) < key2(b);
            };
            std::sort(sa_.begin(), sa_.end(), cmp);
            tmp[sa_[0]] = 0;
            for (std::size_t i = 1; i < m; ++i)
                tmp[sa_[i]] = tmp[sa_[i - 1]] + (cmp(sa_[i - 1], sa_[i]) ? 1 : 0);
            rank_.swap(tmp);
            if (rank_[sa_[m - 1]] == m - 1 || k >= m)
                break;
        }
    }

    void build_lcp() {
        const std::size_t m = text_.size();
        lcp_.assign(m, 0);
        std::size_t h = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (rank_[i] == 0) {
                h = 0;
                continue;
            }
            std::size_t j = sa_[rank_[i] - 1];
            while (i + h < m && j + h < m && text_[i + h] == text_[j + h])
                ++h;
            lcp_[rank_[i]] = h;
            if (h > 0)
                --h;
        }
    }

    void build_sparse_table() {
        const std::size_t m = lcp_.size();
        const std::size_t levels = std::size_t(std::bit_width(m));
        table_.assign(levels, {});
        table_[0].assign(lcp_.begin(), lcp_.end());
        for (std::size_t k = 1; k < levels; ++k) {
            const std::size_t span = std::size_t{1} << k;
            table_[k].resize(m - span + 1);
            for (std::size_t i = 0; i + span <= m; ++i)
                table_[k][i] = std::min(table_[k - 1][i], table_[k - 1][i + span / 2]);
        }
    }

    // min of lcp_[l, r)
    std::size_t range_min(std::size_t l, std::size_t r) const {
        const std::size_t k = std::size_t(std::bit_width(r - l)) - 1;
        return std::min(table_[k][l], table_[k][r - (std::size_t{1} << k)]);
    }

    std::size_t n_;
    std::vector<int> text_;
    std::vector<std::size_t> sa_, rank_, lcp_, rev_before_;
    std::vector<std::vector<std::size_t>> table_;
};

} // namespace revpat::detail
