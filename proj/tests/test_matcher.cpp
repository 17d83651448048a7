#include <catch2/catch.hpp>

#include <random>

#include "oracle.hpp"
#include "revpat/matcher.hpp"

using namespace revpat;

namespace {

Word W(const char* s) { return Word::parse(s, 2); }
Pattern P(const char* s) { return Pattern::parse(s); }

Word random_word(std::mt19937& rng, std::size_t n, int k) {
    std::uniform_int_distribution<int> d(0, k - 1);
    std::vector<Symbol> s(n);
    for (auto& c : s)
        c = Symbol(d(rng));
    return Word(s, k);
}

} // namespace

TEST_CASE("occurrence counts in 0011001") {
    const Word w = W("0011001");
    CHECK(count_occurrences(w, P("aa")) == 3);
    CHECK(count_occurrences(w, P("aA")) == 6);
    CHECK_FALSE(meets(w, P("aaa")));
    CHECK(meets(w, P("aAa")));
    CHECK(count_occurrences(W("00"), P("aa")) == 1);
}

TEST_CASE("find_occurrence witnesses") {
    auto occ = find_occurrence(W("001100"), P("abba"));
    REQUIRE(occ);
    CHECK(format_occurrence(*occ) == "0 6 a=00 b=1");
    CHECK_FALSE(find_occurrence(W("01011"), P("abba")));

    occ = find_occurrence(W("0011001"), P("aAa"));
    REQUIRE(occ);
    CHECK(occ->assignment.at(0) == W("01"));
    CHECK(instantiate(P("aAa"), occ->assignment) == W("0011001").factor(occ->start, occ->end - occ->start));

    CHECK(meets(W("0"), P("a")));
    CHECK(meets(W("0110"), P("abba")));
}

TEST_CASE("find_occurrence prefers leftmost, then shortest, then least images") {
    // 0000 holds aa at 0 with a=0 and with a=00; the shorter wins.
    auto occ = find_occurrence(W("0000"), P("aa"));
    REQUIRE(occ);
    CHECK(format_occurrence(*occ) == "0 2 a=0");
    occ = find_occurrence(W("100101"), P("ab"));
    REQUIRE(occ);
    CHECK(format_occurrence(*occ) == "0 2 a=1 b=0");
}

TEST_CASE("empty pattern and bad positions are rejected") {
    CHECK_THROWS_AS(Pattern::parse(""), ParseError);
    CHECK_THROWS_AS(occurrence_ending_at(W("01"), 2, P("a")), DomainError);
    CHECK_THROWS_AS(stream_avoids("alt01", P("a"), 0), DomainError);
    CHECK_THROWS_AS(stream_avoids("nope", P("a"), 10), RegistryError);
}

TEST_CASE("occurrence_ending_at") {
    CHECK_FALSE(occurrence_ending_at(W("010"), 2, P("aa")));
    CHECK(occurrence_ending_at(W("0110"), 3, P("abba")));
    CHECK(occurrence_ending_at(W("0011"), 3, P("aA")));
    CHECK_FALSE(occurrence_ending_at(W("0011"), 2, P("aA")));
}

TEST_CASE("stream_avoids") {
    CHECK(stream_avoids("tau_prime", P("aAa"), 2000).avoids);
    CHECK(stream_avoids("alt01", P("aA"), 2000).avoids);
    const StreamCheck r = stream_avoids("alt01", P("aa"), 100);
    CHECK_FALSE(r.avoids);
    REQUIRE(r.violation);
    CHECK(format_occurrence(*r.violation) == "0 4 a=01");
}

TEST_CASE("matcher agrees with the factorization oracle on short binary words") {
    std::vector<std::string> pats;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto& p : oracle::all_patterns("aAbB", n))
            pats.push_back(p);
    for (std::size_t n = 0; n <= 12; ++n)
        for (const auto& ws : oracle::all_words(2, n)) {
            const Word w = ws.empty() ? Word(std::vector<Symbol>{}, 2) : Word::parse(ws, 2);
            for (const auto& ps : pats) {
                const bool expect = oracle::meets(ws, ps);
                if (meets(w, Pattern::parse(ps)) != expect)
                    FAIL("disagreement on " << ws << " / " << ps);
            }
        }
    SUCCEED();
}

TEST_CASE("count_occurrences agrees with the oracle") {
    for (const char* ps : {"aa", "aA", "abA", "aAb", "abBa", "AbaB", "aba"})
        for (const auto& ws : oracle::all_words(2, 9))
            REQUIRE(count_occurrences(Word::parse(ws, 2), Pattern::parse(ps)) == oracle::count(ws, ps));
}

TEST_CASE("indexed and backtracking engines return the same occurrence") {
    std::mt19937 rng(12345);
    std::vector<std::string> pats;
    for (std::size_t n = 1; n <= 5; ++n)
        for (auto& p : oracle::all_patterns("aAbB", n))
            pats.push_back(p);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = trial % 3 == 0 ? 3 : 2;
        const Word w = random_word(rng, 48 + std::size_t(trial) * 3, k);
        for (const auto& ps : pats) {
            const Pattern p = Pattern::parse(ps);
            const auto a = detail::find_indexed(w, p);
            const auto b = detail::find_backtracking(w, p);
            if (a != b)
                FAIL("engines disagree on " << w.to_string() << " / " << ps);
        }
    }
    SUCCEED();
}

TEST_CASE("indexed engine on structured long words") {
    // Long words where occurrences, if any, are far from the start.
    for (const char* g : {"tau_prime", "tau_triple", "alt01", "sigma12", "tau_dprime"}) {
        const Word w = generate(g, 400);
        for (const char* ps : {"aA", "aAa", "abBA", "aABb", "ABab", "Abab", "aabaB", "aabba", "abab", "aabb", "AAbbaa"}) {
            const Pattern p = Pattern::parse(ps);
            CHECK(detail::find_indexed(w, p) == detail::find_backtracking(w, p));
        }
    }
}

TEST_CASE("alphabet permutation invariance") {
    const std::vector<std::vector<Symbol>> perms = {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
    for (const auto& ws : oracle::all_words(3, 6)) {
        const Word w = Word::parse(ws, 3);
        for (const auto& perm : perms) {
            std::vector<Symbol> s;
            for (Symbol c : w)
                s.push_back(perm[c]);
            const Word pw(s, 3);
            for (const char* ps : {"aa", "aA", "abA", "aAb", "abBa", "AbaB"})
                REQUIRE(meets(w, Pattern::parse(ps)) == meets(pw, Pattern::parse(ps)));
        }
    }
}

TEST_CASE("reversal duality") {
    std::vector<std::string> pats;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto& p : oracle::all_patterns("aAbB", n))
            pats.push_back(p);
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& ws : oracle::all_words(2, n)) {
            const Word w = Word::parse(ws, 2);
            const Word r = reverse(w);
            for (const auto& ps : pats) {
                const Pattern p = Pattern::parse(ps);
                if (meets(w, p) != meets(r, reverse_pattern(p)))
                    FAIL("duality fails on " << ws << " / " << ps);
            }
        }
    SUCCEED();
}

TEST_CASE("monotonicity under extension") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Word w = random_word(rng, 3 + std::size_t(trial % 9), 2);
        const Word x = random_word(rng, std::size_t(trial % 4), 2);
        const Word y = random_word(rng, std::size_t(trial % 5), 2);
        for (const char* ps : {"aa", "aA", "abBa", "aAbb", "AbaB", "aabA"}) {
            const Pattern p = Pattern::parse(ps);
            if (meets(w, p))
                REQUIRE(meets(x + w + y, p));
        }
    }
}

TEST_CASE("list_occurrences reconstructs every factor") {
    const Word w = W("0011001");
    const auto all = list_occurrences(w, P("aA"));
    CHECK(all.size() == 6);
    for (const auto& occ : all)
        CHECK(instantiate(P("aA"), occ.assignment) == w.factor(occ.start, occ.end - occ.start));
    CHECK(list_occurrences(w, P("aa")).size() == 3);
}

TEST_CASE("divides") {
    CHECK(divides(P("abBA"), P("AABbaa")));
    CHECK(divides(P("aABb"), P("AaBba")));
    CHECK(divides(P("aa"), P("abab")));
    CHECK_FALSE(divides(P("aa"), P("ab")));
    CHECK_FALSE(divides(P("aA"), P("aa")));
}

TEST_CASE("divides is reflexive and transitive on short patterns") {
    std::vector<Pattern> ps;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto& t : oracle::all_patterns("aAbB", n))
            ps.push_back(Pattern::parse(t));
    for (const auto& p : ps)
        REQUIRE(divides(p, p));
    std::vector<Pattern> longer;
    for (auto& t : oracle::all_patterns("aAbB", 5))
        longer.push_back(Pattern::parse(t));
    for (const auto& p : ps)
        for (const auto& q : ps) {
            if (!divides(p, q))
                continue;
            for (const auto& r : longer)
                if (divides(q, r))
                    REQUIRE(divides(p, r));
        }
}

TEST_CASE("a divisor's avoidance carries over to the divided pattern") {
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"abBA", "AABbaa"}, {"abBA", "aABbaa"}, {"abBA", "abABba"}, {"abBA", "abaBbA"}, {"abBA", "abAbBa"},
        {"abBA", "ababBA"}, {"abBA", "aaBbA"},  {"aABb", "AaBba"},  {"aABb", "aABba"},  {"aABb", "AaBbaa"},
        {"aABb", "AaBbAa"}, {"aABb", "AaBbaA"}, {"aA", "aAb"},      {"aA", "baAb"},     {"aA", "abaA"},
        {"aa", "aabb"},     {"aa", "abab"},     {"abab", "ababa"},  {"aAa", "aAab"},    {"ABab", "ABabb"}};
    for (auto [p, q] : pairs) {
        REQUIRE(divides(P(p), P(q)));
        for (const char* g : {"tau_triple", "tau_prime", "alt01", "tau_dprime"}) {
            const Word w = generate(g, 2000);
            if (!meets(w, P(p)))
                CHECK_FALSE(meets(w, P(q)));
        }
    }
}
