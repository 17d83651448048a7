#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revpat/analytics.hpp"
#include "revpat/errors.hpp"
#include "revpat/generators.hpp"
#include "revpat/matcher.hpp"
#include "revpat/pattern.hpp"
#include "revpat/search.hpp"
#include "revpat/word.hpp"

namespace revpat {

struct SuiteConfig {
    std::size_t prefix_len = 10000;
    std::size_t depth = 1000;
};

/// One registered claim compiled to a finite instance.
struct LemmaCheck {
    std::string id;
    std::string anchor;  // the claim it re-checks
    std::string kind;    // stream-avoidance, exhaustive-meets, square-inventory, ...
    std::string summary; // instance description
    std::string expected;
    bool informational = false; // recorded without a verdict
    std::function<std::string(const SuiteConfig&)> observe;
};

struct ReportRow {
    std::string id, anchor, summary, expected, observed, status;
    double ms = 0;
};

struct Report {
    std::vector<ReportRow> rows;
    std::string filter;
    bool unknown_filter = false;

    bool all_passed() const {
        return !unknown_filter &&
               std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == "fail"; });
    }
    std::size_t count(std::string_view status) const {
        return std::size_t(std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.status == status; }));
    }
};

namespace detail {

inline std::string stream_observation(std::string_view gen, const Pattern& p, std::size_t n) {
    const StreamCheck r = stream_avoids(gen, p, n);
    return r.avoids ? "avoids" : "meets at " + format_occurrence(*r.violation);
}

inline std::string search_observation(const SearchOutcome& o) {
    return o.unavoidable() ? "unavoidable(" + std::to_string(o.bound()) + ")" : "depth-exhausted";
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

inline std::vector<Pattern> patterns(std::initializer_list<const char*> texts) {
    std::vector<Pattern> out;
    for (const char* t : texts)
        out.push_back(Pattern::parse(t));
    return out;
}

// "n/n" on success, otherwise the first failing pattern.
template <class Pred>
std::string tally(const std::vector<Pattern>& ps, Pred ok) {
    std::size_t good = 0;
    std::string first_bad;
    for (const auto& p : ps) {
        if (ok(p))
            ++good;
        else if (first_bad.empty())
            first_bad = p.to_string();
    }
    std::string out = std::to_string(good) + "/" + std::to_string(ps.size());
    if (!first_bad.empty())
        out += " first failure " + first_bad;
    return out;
}

inline std::string roots_text(const std::set<Word>& roots) {
    std::vector<std::string> parts;
    for (const auto& r : roots)
        parts.push_back(r.to_string());
    return "{" + join(parts, ",") + "}";
}

inline std::string counts_text(const std::vector<std::uint64_t>& c) {
    std::vector<std::string> parts;
    for (auto x : c)
        parts.push_back(std::to_string(x));
    return join(parts, ",");
}

// Variants of base in which the positions listed in `one_of` carry exactly one mark
// and every other position is unmarked unless listed in `free`.
inline std::vector<Pattern> restricted_variants(const Pattern& base, std::vector<std::size_t> one_of,
                                                std::vector<std::size_t> free) {
    std::vector<Pattern> out;
    for (const Pattern& v : reversal_variants(base)) {
        std::size_t marked_in_group = 0;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].reversed)
                continue;
            if (std::find(one_of.begin(), one_of.end(), i) != one_of.end())
                ++marked_in_group;
            else if (std::find(free.begin(), free.end(), i) == free.end())
                ok = false;
        }
        if (ok && marked_in_group == 1)
            out.push_back(v);
    }
    return out;
}

inline bool has_adjacent_mirror_pair(const Pattern& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i].var == p[i + 1].var && p[i].reversed != p[i + 1].reversed)
            return true;
    return false;
}

// True when every mark of v can be removed by toggling whole variables.
inline bool toggle_equivalent_to_base(const Pattern& v) {
    return canonical_form(v) == canonical_form(underlying(v));
}

inline std::vector<LemmaCheck> build_registry() {
    std::vector<LemmaCheck> r;
    auto add = [&](std::string id, std::string anchor, std::string kind, std::string summary, std::string expected,
                   std::function<std::string(const SuiteConfig&)> f, bool info = false) {
        r.push_back({std::move(id), std::move(anchor), std::move(kind), std::move(summary), std::move(expected), info,
                     std::move(f)});
    };
    auto stream = [&](std::string id, std::string anchor, std::string gen, std::string pat) {
        add(std::move(id), std::move(anchor), "stream-avoidance", gen + " prefix avoids " + pat, "avoids",
            [gen, pat](const SuiteConfig& c) { return stream_observation(gen, Pattern::parse(pat), c.prefix_len); });
    };
    auto stream_family = [&](std::string id, std::string anchor, std::string gen, std::vector<Pattern> ps,
                             std::string what) {
        const std::string expected = std::to_string(ps.size()) + "/" + std::to_string(ps.size());
        add(std::move(id), std::move(anchor), "stream-avoidance", gen + " prefix avoids " + what, expected,
            [gen, ps](const SuiteConfig& c) {
                return tally(ps, [&](const Pattern& p) { return stream_avoids(gen, p, c.prefix_len).avoids; });
            });
    };
    auto evidence = [&](std::string id, std::string anchor, std::string gen) {
        add(std::move(id), std::move(anchor), "aperiodicity-evidence", "Morse-Hedlund on " + gen + " prefix, n <= 20",
            "APERIODIC-EVIDENCE(20)", [gen](const SuiteConfig& c) {
                return morse_hedlund_evidence(generate(gen, std::int64_t(std::max<std::size_t>(c.prefix_len, 40))), 20)
                    .to_string();
            });
    };
    auto search_row = [&](std::string id, std::string anchor, std::string pat, int k, std::string expected) {
        add(std::move(id), std::move(anchor), "search-verdict", "search " + pat + " over " + std::to_string(k) + " letters",
            std::move(expected),
            [pat, k](const SuiteConfig& c) { return search_observation(search(Pattern::parse(pat), k, c.depth)); });
    };
    auto index_row = [&](std::string id, std::string anchor, std::string pat, int k_max, std::string expected) {
        add(std::move(id), std::move(anchor), "search-verdict",
            "estimate_index " + pat + " up to " + std::to_string(k_max) + " letters", std::move(expected),
            [pat, k_max](const SuiteConfig& c) {
                const IndexEstimate e = estimate_index(Pattern::parse(pat), k_max, c.depth);
                return "lower_bound " + std::to_string(e.lower_bound) + " candidate " +
                       (e.candidate ? std::to_string(*e.candidate) : std::string("none"));
            });
    };
    auto certificate = [&](std::string id, std::string anchor, std::string pat, int k, std::size_t L) {
        add(std::move(id), std::move(anchor), "exhaustive-meets",
            "all words of length " + std::to_string(L) + " over " + std::to_string(k) + " letters meet " + pat +
                ", some of length " + std::to_string(L - 1) + " avoid it",
            "unavoidable(" + std::to_string(L) + ") certified", [pat, k](const SuiteConfig& c) {
                const Pattern p = Pattern::parse(pat);
                const SearchOutcome o = search(p, k, c.depth);
                if (!o.unavoidable())
                    return std::string("depth-exhausted");
                const bool at = exhaustive_unavoidability(p, k, o.bound());
                const bool below = exhaustive_unavoidability(p, k, o.bound() - 1);
                return search_observation(o) + (at && !below ? " certified" : " not certified");
            });
    };
    auto counts_row = [&](std::string id, std::string anchor, std::string pat, std::string frozen) {
        add(std::move(id), std::move(anchor), "count-growth", "binary avoiders of " + pat + " by length, n <= 22",
            std::move(frozen),
            [pat](const SuiteConfig&) { return counts_text(count_avoiders(Pattern::parse(pat), 2, 22)); });
    };

    // Preliminaries.
    const Word w0011001 = Word::parse("0011001", 2);
    add("S2_count_aa", "three occurrences of aa in 0011001", "occurrence-count", "count aa in 0011001", "3",
        [w0011001](const SuiteConfig&) { return std::to_string(count_occurrences(w0011001, Pattern::parse("aa"))); });
    add("S2_count_aA", "six occurrences of aA in 0011001", "occurrence-count", "count aA in 0011001", "6",
        [w0011001](const SuiteConfig&) { return std::to_string(count_occurrences(w0011001, Pattern::parse("aA"))); });
    add("S2_meets_aaa", "no occurrence of aaa in 0011001", "occurrence-count", "0011001 against aaa", "avoids",
        [w0011001](const SuiteConfig&) { return meets(w0011001, Pattern::parse("aaa")) ? "meets" : "avoids"; });
    add("S2_meets_aAa", "aAa occurs in 0011001 with a=01", "occurrence-count", "0011001 against aAa",
        "meets at 1 7 a=01", [w0011001](const SuiteConfig&) {
            auto occ = find_occurrence(w0011001, Pattern::parse("aAa"));
            return occ ? "meets at " + format_occurrence(*occ) : std::string("avoids");
        });
    add("S2_abba_meets", "001100 meets abba with a=00, b=1", "occurrence-count", "001100 against abba",
        "meets at 0 6 a=00 b=1", [](const SuiteConfig&) {
            auto occ = find_occurrence(Word::parse("001100", 2), Pattern::parse("abba"));
            return occ ? "meets at " + format_occurrence(*occ) : std::string("avoids");
        });
    add("S2_abba_avoids", "01011 avoids abba", "occurrence-count", "01011 against abba", "avoids",
        [](const SuiteConfig&) { return meets(Word::parse("01011", 2), Pattern::parse("abba")) ? "meets" : "avoids"; });
    add("R_sqfree_pal", "square-free words avoid even palindromes", "palindrome-inventory",
        "squarefree3 prefix: squares, even palindromes", "squares 0 even-palindromes 0", [](const SuiteConfig& c) {
            const Word w = generate("squarefree3", std::int64_t(c.prefix_len));
            return "squares " + std::to_string(list_squares(w).size()) + " even-palindromes " +
                   std::to_string(list_palindromes(w, 2, Parity::even).size());
        });
    stream("R_ternary_pal", "(012)^w avoids aA", "alt012", "aA");

    // Unary patterns.
    add("T_unary_1", "a and A are unavoidable", "search-verdict", "search a and A over 2 and 3 letters",
        "unavoidable(1) x4", [](const SuiteConfig& c) {
            std::vector<std::string> out;
            for (const char* p : {"a", "A"})
                for (int k : {2, 3})
                    out.push_back(search_observation(search(Pattern::parse(p), k, c.depth)));
            bool same = std::all_of(out.begin(), out.end(), [&](const std::string& s) { return s == out[0]; });
            return same ? out[0] + " x4" : join(out);
        });
    add("T_unary_unary_alphabet", "no unary pattern is avoidable over one letter", "search-verdict",
        "search aa aA aAa aaa aAAa over 1 letter", "unavoidable(2) unavoidable(2) unavoidable(3) unavoidable(3) unavoidable(4)",
        [](const SuiteConfig& c) {
            std::vector<std::string> out;
            for (const char* p : {"aa", "aA", "aAa", "aaa", "aAAa"})
                out.push_back(search_observation(search(Pattern::parse(p), 1, c.depth)));
            return join(out);
        });
    stream_family("T_unary_2", "aperiodic ternary words avoid unary patterns of length > 1", "squarefree3",
                  patterns({"aa", "aA", "Aa", "AA"}), "every unary pattern of length 2");
    evidence("T_unary_2_aperiodic", "aperiodic ternary words avoid unary patterns of length > 1", "squarefree3");
    {
        std::vector<Pattern> mirrored;
        for (std::size_t len = 2; len <= 5; ++len)
            for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                std::vector<PatternSymbol> syms;
                for (std::size_t i = 0; i < len; ++i)
                    syms.push_back({0, bool(mask >> (len - 1 - i) & 1u)});
                Pattern p(syms);
                if (has_adjacent_mirror_pair(p))
                    mirrored.push_back(p);
            }
        stream_family("T_unary_3", "unary patterns with aA or Aa as factor are 2-avoidable", "alt01", mirrored,
                      "every unary pattern of length 2..5 with aA or Aa as factor");
    }
    stream("T_unary_4", "tau_prime avoids aAa", "tau_prime", "AaA");
    stream("R_unary_avoid", "(01)^w avoids aA", "alt01", "aA");
    search_row("R_unary_avoid_search", "aA is 2-avoidable", "aA", 2, "depth-exhausted");
    stream("L_tau_prime", "tau_prime avoids aAa", "tau_prime", "aAa");
    evidence("L_tau_prime_aperiodic", "tau_prime is aperiodic", "tau_prime");
    add("L_tau_prime_prefix", "tau_prime starts 0110101101", "factor-absence", "first 10 letters of tau_prime",
        "0110101101", [](const SuiteConfig&) { return generate("tau_prime", 10).to_string(); });

    // Classical binary classification.
    index_row("T2_item1", "a, ab, aba are unavoidable", "aba", 4, "lower_bound 5 candidate none");
    add("T2_item1_axa", "any factor axa meets every marked a, ab, aba", "exhaustive-meets",
        "0x0 for x over {1,2} of length 1..3 against all marked variants", "all meet", [](const SuiteConfig&) {
            std::vector<Pattern> ps;
            for (const char* b : {"a", "ab", "aba"}) {
                ps.push_back(Pattern::parse(b));
                for (auto& v : reversal_variants(Pattern::parse(b)))
                    ps.push_back(v);
            }
            for (std::size_t len = 1; len <= 3; ++len)
                for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                    std::vector<Symbol> s{0};
                    for (std::size_t i = 0; i < len; ++i)
                        s.push_back(Symbol(1 + (mask >> i & 1u)));
                    s.push_back(0);
                    const Word w(s, 3);
                    for (const auto& p : ps)
                        if (!meets(w, p))
                            return w.to_string() + " avoids " + p.to_string();
                }
            return std::string("all meet");
        });
    {
        const std::vector<std::pair<const char*, int>> item2 = {{"aa", 4},    {"aab", 5},    {"aaba", 10}, {"aabb", 12},
                                                                {"abab", 19}, {"abba", 11},  {"aabaa", 19}, {"aabab", 39}};
        for (auto [pat, L] : item2) {
            const std::string p = pat;
            add("T2_item2_" + p, "classical index-3 binary patterns", "search-verdict",
                "search " + p + " over 2 letters; squarefree3 avoids it through aa",
                "k2 unavoidable(" + std::to_string(L) + ") k3 aa divides; squarefree3 avoids",
                [p](const SuiteConfig& c) {
                    const Pattern q = Pattern::parse(p);
                    return "k2 " + search_observation(search(q, 2, c.depth)) + " k3 aa " +
                           (divides(Pattern::parse("aa"), q) ? "divides" : "does not divide") + "; squarefree3 " +
                           stream_observation("squarefree3", q, c.prefix_len);
                });
        }
    }
    for (const char* pat : {"aabba", "ababa", "aababb", "ababba", "aabbaa"})
        search_row(std::string("T2_item3_") + pat, "remaining binary patterns have index 2", pat, 2, "depth-exhausted");

    // Remarks on marked index-3 patterns over two letters.
    {
        auto one_alpha = [](const char* base) {
            const Pattern b = Pattern::parse(base);
            std::vector<std::size_t> alpha;
            for (std::size_t i = 0; i < b.size(); ++i)
                if (b[i].var == 0)
                    alpha.push_back(i);
            return restricted_variants(b, alpha, {});
        };
        const char* anchor = "(01)^w avoids aA, so one reversed a gives index 2";
        stream_family("R_rem1_aa", anchor, "alt01", one_alpha("aa"), "aa with one a reversed");
        stream_family("R_rem1_aab", anchor, "alt01", one_alpha("aab"), "aab with one a reversed");
        stream_family("R_rem1_aabb", anchor, "alt01", one_alpha("aabb"), "aabb with one a reversed");
        stream_family("R_rem1_baab", anchor, "alt01", one_alpha("abba"), "baab with one a reversed");
        stream_family("R_rem1_aabaa", anchor, "alt01", one_alpha("aabaa"), "aabaa with one a reversed");
        stream_family("R_rem1_listed", anchor, "alt01", patterns({"Aaba", "aAba", "aAbAa", "AabAa"}),
                      "Aaba aAba aAbAa AabAa");
        stream_family("R_rem1_aabab", anchor, "alt01", restricted_variants(Pattern::parse("aabab"), {0, 1}, {2, 3, 4}),
                      "aabab with exactly one of the first two a reversed");
    }
    add("R_aaba_recurrent", "every binary word has 00 or 01010 or a complement", "exhaustive-meets",
        "binary words of length 5 containing 00, 11, 01010 or 10101", "32/32", [](const SuiteConfig&) {
            int hits = 0;
            for (std::uint32_t m = 0; m < 32; ++m) {
                std::string s;
                for (int i = 4; i >= 0; --i)
                    s += char('0' + (m >> i & 1u));
                if (s.find("00") != std::string::npos || s.find("11") != std::string::npos ||
                    s.find("01010") != std::string::npos || s.find("10101") != std::string::npos)
                    ++hits;
            }
            return std::to_string(hits) + "/32";
        });
    certificate("R_aaba_variants_aabA", "aabA occurs in every long binary word", "aabA", 2, 10);
    certificate("R_aaba_variants_aabAA", "aabAA occurs in every long binary word", "aabAA", 2, 19);

    // ABab.
    stream("L_avoid1", "tau_dprime avoids ABab", "tau_dprime", "ABab");
    certificate("L_avoid1_k2", "ABab is not 2-avoidable", "ABab", 2, 11);
    index_row("L_avoid1_index", "ABab has avoidability index 3", "ABab", 3, "lower_bound 3 candidate 3");
    evidence("L_avoid1_aperiodic", "tau_dprime is aperiodic", "tau_dprime");

    // Abab and the ternary square-free image.
    add("T_useful", "sigma12 has no square with root >= 2 and no palindrome of length >= 3", "square-inventory",
        "sigma12 prefix: squares with root >= 2, palindromes of length >= 3", "squares 0 palindromes 0",
        [](const SuiteConfig& c) {
            const Word w = generate("sigma12", std::int64_t(c.prefix_len));
            return "squares " + std::to_string(list_squares(w, 2).size()) + " palindromes " +
                   std::to_string(list_palindromes(w, 3).size());
        });
    stream("L_aRbab", "sigma12 avoids Abab", "sigma12", "Abab");
    certificate("L_aRbab_k2", "Abab is not 2-avoidable", "Abab", 2, 14);
    index_row("L_aRbab_index", "Abab has avoidability index 3", "Abab", 3, "lower_bound 3 candidate 3");
    add("L_aRbab_factors", "sigma12 has no factor 10, 02, 21", "factor-absence", "sigma12 prefix factors 10 02 21",
        "absent", [](const SuiteConfig& c) {
            const std::string s = generate("sigma12", std::int64_t(c.prefix_len)).to_string();
            for (const char* f : {"10", "02", "21"})
                if (s.find(f) != std::string::npos)
                    return std::string("contains ") + f;
            return std::string("absent");
        });
    evidence("L_aRbab_aperiodic", "sigma12 is aperiodic", "sigma12");

    // abbA, abBa.
    stream("L_abbA_alt01", "(01)^w avoids abbA", "alt01", "abbA");
    add("L_abbA_0111", "(0111)^w meets abbA with a=1, b=1011", "occurrence-count", "(0111)^5 against abbA",
        "meets", [](const SuiteConfig&) {
            return meets(Word::parse("01110111011101110111", 2), Pattern::parse("abbA")) ? "meets" : "avoids";
        });
    counts_row("L_abbA_counts", "every aperiodic binary word meets abbA", "abbA",
               "1,2,4,8,12,18,22,28,38,50,56,68,84,102,118,142,172,204,228,264,308,358,412");
    counts_row("L_abBa_counts", "every aperiodic binary word meets abBa", "abBa",
               "1,2,4,8,12,18,22,24,24,24,20,18,18,18,18,18,18,18,18,18,18,18,18");

    // Lemma 4 and Lemma 5 on tau_triple.
    stream("L4", "tau_triple avoids abBA", "tau_triple", "abBA");
    add("L4_factors", "tau_triple has no 00, 0110, 1111; odd 0-runs between 111 blocks", "factor-absence",
        "tau_triple prefix factors and gaps between 111 blocks", "absent; gaps odd", [](const SuiteConfig& c) {
            const std::string s = generate("tau_triple", std::int64_t(c.prefix_len)).to_string();
            for (const char* f : {"00", "0110", "1111"})
                if (s.find(f) != std::string::npos)
                    return std::string("contains ") + f;
            std::size_t prev = s.find("111");
            while (prev != std::string::npos) {
                const std::size_t next = s.find("111", prev + 3);
                if (next == std::string::npos)
                    break;
                const auto zeros = std::count(s.begin() + std::ptrdiff_t(prev), s.begin() + std::ptrdiff_t(next), '0');
                if (zeros % 2 == 0)
                    return "even gap at " + std::to_string(prev);
                prev = next;
            }
            return std::string("absent; gaps odd");
        });
    add("L4_pal", "the only even palindrome of tau_triple is 11", "palindrome-inventory",
        "distinct even palindromes of tau_triple prefix", "{11}", [](const SuiteConfig& c) {
            const Word w = generate("tau_triple", std::int64_t(c.prefix_len));
            std::set<Word> pals;
            for (const auto& o : list_palindromes(w, 2, Parity::even))
                pals.insert(w.factor(o.position, o.length));
            return roots_text(pals);
        });
    evidence("L4_aperiodic", "tau_triple is aperiodic", "tau_triple");
    stream("L5", "tau_triple avoids aABb", "tau_triple", "aABb");

    // aAbb.
    add("L_suffix01_finite", "every word 100.{0,1}^8 meets aAbb", "exhaustive-meets", "256 words 100x, |x| = 8",
        "256/256", [](const SuiteConfig&) {
            const Pattern p = Pattern::parse("aAbb");
            int hits = 0;
            for (std::uint32_t m = 0; m < 256; ++m) {
                std::vector<Symbol> s{1, 0, 0};
                for (int i = 7; i >= 0; --i)
                    s.push_back(Symbol(m >> i & 1u));
                if (meets(Word(s, 2), p))
                    ++hits;
            }
            return std::to_string(hits) + "/256";
        });
    stream("L_suffix01_periodic", "(01)^w avoids aAbb", "alt01", "aAbb");
    counts_row("L_suffix01_counts", "binary avoiders of aAbb end in (01)^w", "aAbb",
               "1,2,4,8,12,18,24,32,34,32,30,26,26,26,26,26,26,26,26,26,26,26,26");

    // aabab variants.
    stream("L_aabab_1", "(01)^w avoids aabaB", "alt01", "aabaB");
    stream("L_aabab_2", "(01)^w avoids aabAb", "alt01", "aabAb");
    stream("L_aabab_3", "(01)^w avoids aabAB", "alt01", "aabAB");
    counts_row("L_no_aper_aabab_1", "no aperiodic binary word avoids a marked aabab", "aabaB",
               "1,2,4,8,16,28,50,84,132,206,310,456,654,922,1286,1780,2450,3348,4592,6296,8624,11838,16292");
    counts_row("L_no_aper_aabab_2", "no aperiodic binary word avoids a marked aabab", "aabAb",
               "1,2,4,8,16,28,50,82,130,194,282,394,540,716,918,1140,1362,1578,1782,1956,2072,2136,2126");
    counts_row("L_no_aper_aabab_3", "no aperiodic binary word avoids a marked aabab", "aabAB",
               "1,2,4,8,16,28,50,84,132,204,304,444,642,904,1252,1718,2352,3206,4400,6024,8270,11350,15606");

    // aabba variants.
    {
        const auto variants = reversal_variants(Pattern::parse("aabba"));
        for (std::size_t i = 0; i < variants.size(); ++i) {
            const Pattern v = variants[i];
            const std::string id = (i + 1 < 10 ? "L_aabba_0" : "L_aabba_") + std::to_string(i + 1);
            if (detail::toggle_equivalent_to_base(v)) {
                // Same avoidability as plain aabba, which (01)^w meets.
                add(id, "marked aabba has index 2 (mark removable by symmetry)", "search-verdict",
                    "search " + v.to_string() + " over 2 letters", "depth-exhausted", [v](const SuiteConfig& c) {
                        return search_observation(search(v, 2, c.depth));
                    });
            } else {
                stream(id, "(01)^w avoids every aabba variant with a mirror", "alt01", v.to_string());
            }
        }
    }
    // Six-letter families by divisibility.
    for (const char* base : {"aababb", "ababba", "aabbaa"}) {
        std::vector<Pattern> marked;
        for (const auto& v : reversal_variants(Pattern::parse(base)))
            if (!detail::toggle_equivalent_to_base(v))
                marked.push_back(v);
        stream_family(std::string("L_div6_") + base, "marked variants of " + std::string(base) + " have index 2",
                      "alt01", marked, "every variant of " + std::string(base) + " not removable by symmetry");
    }

    // Ababa and the 6-uniform image.
    add("T_rsw", "the only squares of rsw6 are 00, 11, 0101", "square-inventory", "square roots in rsw6 prefix",
        "{0,01,1}", [](const SuiteConfig& c) {
            return roots_text(square_roots(generate("rsw6", std::int64_t(c.prefix_len))));
        });
    add("T_rsw_base", "the base word is square-free and avoids 13 factors", "factor-absence",
        "squarefree5_rsw prefix of 2000: squares and forbidden factors", "squares 0 forbidden 0",
        [](const SuiteConfig&) {
            const Word w = generate("squarefree5_rsw", 2000);
            const std::string s = w.to_string();
            int forbidden = 0;
            for (const char* f : {"02", "03", "04", "13", "14", "20", "24", "30", "31", "41", "42", "434010"})
                if (s.find(f) != std::string::npos)
                    ++forbidden;
            return "squares " + std::to_string(list_squares(w).size()) + " forbidden " + std::to_string(forbidden);
        });
    stream("L11", "rsw6 avoids Ababa", "rsw6", "Ababa");
    evidence("L11_aperiodic", "rsw6 is aperiodic", "rsw6");

    // Lemma 12.
    {
        const char* l12[] = {"AAbbaa", "AabbAa", "AabbaA", "Aabbaa", "aAbbaa", "aAbabb", "Aababb", "AabaBb", "aAbaBb"};
        for (int i = 0; i < 9; ++i)
            stream("L12_" + std::to_string(i + 1), "tau_triple avoids the nine six-letter patterns", "tau_triple", l12[i]);
    }

    // Consequences by divisibility.
    auto consequence = [&](std::string id, std::string anchor, std::string parent, std::string child) {
        add(std::move(id), std::move(anchor), "divisibility",
            parent + " divides " + child + "; tau_triple avoids both", "divides; parent avoids; child avoids",
            [parent, child](const SuiteConfig& c) {
                const Pattern pp = Pattern::parse(parent), cp = Pattern::parse(child);
                return std::string(divides(pp, cp) ? "divides" : "does not divide") + "; parent " +
                       (stream_avoids("tau_triple", pp, c.prefix_len).avoids ? "avoids" : "meets") + "; child " +
                       (stream_avoids("tau_triple", cp, c.prefix_len).avoids ? "avoids" : "meets");
            });
    };
    {
        const char* c4[] = {"AABbaa", "aABbaa", "abABba", "abaBbA", "abAbBa", "ababBA", "aaBbA"};
        for (int i = 0; i < 7; ++i)
            consequence("CONSEQ_L4_" + std::to_string(i + 1), "consequences of abBA by divisibility", "abBA", c4[i]);
        const char* c5[] = {"AaBba", "aABba", "AaBbaa", "AaBbAa", "AaBbaA"};
        for (int i = 0; i < 5; ++i)
            consequence("CONSEQ_L5_" + std::to_string(i + 1), "consequences of aABb by divisibility", "aABb", c5[i]);
    }

    // Open questions, recorded without a verdict.
    {
        const char* open[] = {"Aabba", "aAbba", "aabbA",  "aabAbb", "AaBabb", "aABabb", "aaBAbb",
                              "abAbba", "ababbA", "ABabba", "aBAbba", "aBabbA", "AbaBba", "AbabBa"};
        for (int i = 0; i < 14; ++i) {
            const std::string p = open[i];
            add("Q_open_" + std::to_string(i + 1), "open: aperiodic binary avoider of " + p, "search-verdict",
                "search " + p + " over 2 letters; periodicity of the witness", "none",
                [p](const SuiteConfig& c) {
                    const SearchOutcome o = search(Pattern::parse(p), 2, c.depth);
                    std::string out = search_observation(o);
                    if (!o.unavoidable() && o.witness().size() >= 40)
                        out += " witness " + morse_hedlund_evidence(o.witness(), 20).to_string();
                    return out;
                },
                true);
        }
    }

    std::sort(r.begin(), r.end(), [](const LemmaCheck& a, const LemmaCheck& b) { return a.id < b.id; });
    return r;
}

} // namespace detail

/// Every registered check, ordered by id.
inline const std::vector<LemmaCheck>& lemma_registry() {
    static const std::vector<LemmaCheck> r = detail::build_registry();
    return r;
}

/// Runs every check whose id starts with `filter` (all when empty).
inline Report run_suite(std::string_view filter, std::size_t prefix_len, std::size_t depth) {
    if (prefix_len < 100)
        throw DomainError("prefix_len must be >= 100");
    if (depth < 1)
        throw DomainError("depth must be >= 1");
    const SuiteConfig cfg{prefix_len, depth};
    Report rep;
    rep.filter = std::string(filter);
    for (const auto& check : lemma_registry()) {
        if (!check.id.starts_with(filter))
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        ReportRow row{check.id, check.anchor, check.summary, check.expected, check.observe(cfg), "", 0};
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        row.status = check.informational ? "info" : row.observed == row.expected ? "pass" : "fail";
        rep.rows.push_back(std::move(row));
    }
    rep.unknown_filter = rep.rows.empty() && !filter.empty();
    return rep;
}

enum class ReportFormat { csv, markdown };

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string md_field(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

/// Columns id, anchor, expected, observed, status, ms.
inline std::string emit_report(const Report& r, ReportFormat format) {
    std::ostringstream os;
    auto ms = [](double v) {
        std::ostringstream m;
        m << std::fixed << std::setprecision(1) << v;
        return m.str();
    };
    if (format == ReportFormat::csv) {
        os << "id,anchor,expected,observed,status,ms\n";
        for (const auto& row : r.rows)
            os << detail::csv_field(row.id) << ',' << detail::csv_field(row.anchor) << ','
               << detail::csv_field(row.expected) << ',' << detail::csv_field(row.observed) << ',' << row.status << ','
               << ms(row.ms) << '\n';
    } else {
        os << "| id | anchor | expected | observed | status | ms |\n";
        os << "|---|---|---|---|---|---|\n";
        for (const auto& row : r.rows)
            os << "| " << detail::md_field(row.id) << " | " << detail::md_field(row.anchor) << " | "
               << detail::md_field(row.expected) << " | " << detail::md_field(row.observed) << " | " << row.status
               << " | " << ms(row.ms) << " |\n";
    }
    return os.str();
}

} // namespace revpat
