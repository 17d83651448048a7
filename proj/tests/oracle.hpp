#pragma once

// Brute-force references used only by the tests.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

// Pattern as (variable letter, reversed) pairs straight from the text.
inline std::vector<std::pair<char, bool>> read_pattern(const std::string& p) {
    std::vector<std::pair<char, bool>> out;
    for (char c : p) {
        if (c >= 'a' && c <= 'z')
            out.push_back({c, false});
        else
            out.push_back({char(c - 'A' + 'a'), true});
    }
    return out;
}

// Cut w[s, e) into |p| non-empty pieces in every possible way; a piece at a
// reversed position is read backwards before comparing with the image.
inline void factorizations(const std::string& w, std::size_t pos, std::size_t end,
                           const std::vector<std::pair<char, bool>>& p, std::size_t k,
                           std::map<char, std::string>& images, std::size_t& found, bool stop_at_first) {
    if (stop_at_first && found)
        return;
    if (k == p.size()) {
        if (pos == end)
            ++found;
        return;
    }
    const std::size_t left = p.size() - k - 1;
    for (std::size_t len = 1; pos + len + left <= end; ++len) {
        std::string piece = w.substr(pos, len);
        if (p[k].second)
            piece = std::string(piece.rbegin(), piece.rend());
        auto it = images.find(p[k].first);
        if (it != images.end()) {
            if (it->second != piece)
                continue;
            factorizations(w, pos + len, end, p, k + 1, images, found, stop_at_first);
        } else {
            images[p[k].first] = piece;
            factorizations(w, pos + len, end, p, k + 1, images, found, stop_at_first);
            images.erase(p[k].first);
        }
    }
}

inline std::size_t count(const std::string& w, const std::string& pattern, bool stop_at_first = false) {
    const auto p = read_pattern(pattern);
    std::size_t found = 0;
    for (std::size_t s = 0; s < w.size(); ++s)
        for (std::size_t e = s + p.size(); e <= w.size(); ++e) {
            std::map<char, std::string> images;
            factorizations(w, s, e, p, 0, images, found, stop_at_first);
            if (stop_at_first && found)
                return found;
        }
    return found;
}

inline bool meets(const std::string& w, const std::string& pattern) { return count(w, pattern, true) > 0; }

// Every word of length n over {0..k-1}, as digit strings.
inline std::vector<std::string> all_words(int k, std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (int c = 0; c < k; ++c)
                next.push_back(w + char('0' + c));
        out.swap(next);
    }
    return out;
}

// Every pattern text of length n over the given letters.
inline std::vector<std::string> all_patterns(const std::string& letters, std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& p : out)
            for (char c : letters)
                next.push_back(p + c);
        out.swap(next);
    }
    return out;
}

// Number of words of length n over k letters avoiding the pattern, by enumeration.
inline std::size_t avoiders(const std::string& pattern, int k, std::size_t n) {
    std::size_t c = 0;
    for (const auto& w : all_words(k, n))
        if (!meets(w, pattern))
            ++c;
    return c;
}

} // namespace oracle
