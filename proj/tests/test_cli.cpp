#include <catch2/catch.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using namespace revpat;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("check") {
    auto r = run({"check", "--pattern", "abba", "--word", "001100"});
    CHECK(r.code == 1);
    CHECK(r.out == "meets\n0 6 a=00 b=1\n");
    r = run({"check", "--pattern", "abba", "--word", "01011"});
    CHECK(r.code == 0);
    CHECK(r.out == "avoids\n");
    r = run({"check", "--pattern", "aAa", "--generator", "tau_prime", "--length", "2000"});
    CHECK(r.code == 0);
    r = run({"check", "--pattern", "aa", "--generator", "alt01", "--length", "100"});
    CHECK(r.code == 1);
    CHECK(r.out == "meets\n0 4 a=01\n");
}

TEST_CASE("check reads a word file") {
    const std::string path = "revpat_cli_word.txt";
    {
        std::ofstream f(path);
        f << "0011\n001\n";
    }
    auto r = run({"check", "--pattern", "aAa", "--word-file", path});
    std::remove(path.c_str());
    CHECK(r.code == 1);
    CHECK(r.out == "meets\n1 7 a=01\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "--pattern", "abba"}).code == 2);
    CHECK(run({"check", "--pattern", "ab1", "--word", "01"}).code == 2);
    CHECK(run({"check", "--pattern", "", "--word", "01"}).code == 2);
    CHECK(run({"check", "--pattern", "aa", "--word", "01", "--generator", "alt01"}).code == 2);
    CHECK(run({"generate", "--name", "nope", "--length", "4"}).code == 2);
    CHECK(run({"generate", "--name", "alt01", "--length", "-1"}).code == 2);
    CHECK(run({"search", "--pattern", "aa", "--alphabet", "0"}).code == 2);
    CHECK(run({"verify", "--prefix-len", "50"}).code == 2);
    CHECK(run({"verify", "--format", "xml"}).code == 2);
    const auto r = run({"check", "-p", "aa"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("resource guard exits with 3") {
    const auto r = run({"search", "--pattern", "aabab", "--alphabet", "2", "--certify"});
    CHECK(r.code == 3);
    CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("generate") {
    CHECK(run({"generate", "--name", "tau_prime", "--length", "10"}).out == "0110101101\n");
    CHECK(run({"generate", "--name", "sigma12", "--length", "12"}).out == "011220012201\n");
}

TEST_CASE("search") {
    auto r = run({"search", "--pattern", "aa", "--alphabet", "2", "--depth", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("unavoidable L=4 ", 0) == 0);
    r = run({"search", "--pattern", "aa", "--alphabet", "2", "--certify"});
    CHECK(r.out.find("certified by enumeration") != std::string::npos);
    r = run({"search", "--pattern", "aA", "--alphabet", "2", "--depth", "6"});
    CHECK(r.out.rfind("depth-exhausted (conjectured avoidable) witness=010101 ", 0) == 0);
}

TEST_CASE("search --json round-trips") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"search", "--pattern", "abba", "--alphabet", "2", "--json"},
             {"search", "--pattern", "aA", "--alphabet", "2", "--depth", "50", "--json"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.contains("pattern"));
        CHECK(j.contains("k"));
        CHECK(j.contains("verdict"));
        CHECK((j.contains("L") || j.contains("witness")));
        CHECK(j.contains("nodes_explored"));
        CHECK(j.contains("wall_time_ms"));
        const SearchOutcome o = search_outcome_from_json(j);
        CHECK(to_json(o) == j);
    }
    CHECK_THROWS_AS(search_outcome_from_json(nlohmann::json::parse(R"({"pattern":"aa"})")), ParseError);
}

TEST_CASE("count") {
    const auto r = run({"count", "--pattern", "aa", "--alphabet", "2", "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n2\n2\n");
}

TEST_CASE("index") {
    auto r = run({"index", "--pattern", "abba", "--max-k", "3", "--depth", "300"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("lower_bound=3 candidate=3 depth=300\n", 0) == 0);
    r = run({"index", "--pattern", "aba", "--max-k", "3", "--depth", "300", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lower_bound"] == 4);
    CHECK(j["candidate"].is_null());
    const IndexEstimate e = index_estimate_from_json(j);
    CHECK(to_json(e) == j);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--filter", "S2", "--prefix-len", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("id,anchor,expected,observed,status,ms\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    r = run({"verify", "--filter", "S2_count", "--prefix-len", "100", "--format", "markdown"});
    CHECK(r.out.rfind("| id | anchor | expected | observed | status | ms |\n", 0) == 0);
    r = run({"verify", "--filter", "NOPE", "--prefix-len", "100"});
    CHECK(r.code == 1);
    CHECK(r.out == "id,anchor,expected,observed,status,ms\n");
    CHECK(r.err.find("NOPE") != std::string::npos);
}

TEST_CASE("analyze") {
    const auto r = run({"analyze", "--word", "0011001", "--squares", "1", "--palindromes", "3", "--complexity", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "length 7\n"
                   "max_unary_power 2\n"
                   "squares 3\n0 0\n2 1\n4 0\n"
                   "palindromes 3\n0 001100\n1 0110\n3 1001\n"
                   "complexity\n1 2\n2 4\n3 4\n"
                   "APERIODIC-EVIDENCE(3)\n");
}
