#include <catch2/catch.hpp>

#include <set>

#include "revpat/verify.hpp"

using namespace revpat;

namespace {

const std::vector<std::string> kIds = {
    "CONSEQ_L4_1", "CONSEQ_L4_2", "CONSEQ_L4_3", "CONSEQ_L4_4", "CONSEQ_L4_5", "CONSEQ_L4_6", "CONSEQ_L4_7",
    "CONSEQ_L5_1", "CONSEQ_L5_2", "CONSEQ_L5_3", "CONSEQ_L5_4", "CONSEQ_L5_5", "L11", "L11_aperiodic",
    "L12_1", "L12_2", "L12_3", "L12_4", "L12_5", "L12_6", "L12_7", "L12_8", "L12_9", "L4", "L4_aperiodic",
    "L4_factors", "L4_pal", "L5", "L_aRbab", "L_aRbab_aperiodic", "L_aRbab_factors", "L_aRbab_index",
    "L_aRbab_k2", "L_aabab_1", "L_aabab_2", "L_aabab_3", "L_aabba_01", "L_aabba_02", "L_aabba_03",
    "L_aabba_04", "L_aabba_05", "L_aabba_06", "L_aabba_07", "L_aabba_08", "L_aabba_09", "L_aabba_10",
    "L_aabba_11", "L_aabba_12", "L_aabba_13", "L_aabba_14", "L_aabba_15", "L_aabba_16", "L_aabba_17",
    "L_aabba_18", "L_aabba_19", "L_aabba_20", "L_aabba_21", "L_aabba_22", "L_aabba_23", "L_aabba_24",
    "L_aabba_25", "L_aabba_26", "L_aabba_27", "L_aabba_28", "L_aabba_29", "L_aabba_30", "L_aabba_31",
    "L_abBa_counts", "L_abbA_0111", "L_abbA_alt01", "L_abbA_counts", "L_avoid1", "L_avoid1_aperiodic",
    "L_avoid1_index", "L_avoid1_k2", "L_div6_aababb", "L_div6_aabbaa", "L_div6_ababba", "L_no_aper_aabab_1",
    "L_no_aper_aabab_2", "L_no_aper_aabab_3", "L_suffix01_counts", "L_suffix01_finite", "L_suffix01_periodic",
    "L_tau_prime", "L_tau_prime_aperiodic", "L_tau_prime_prefix", "Q_open_1", "Q_open_10", "Q_open_11",
    "Q_open_12", "Q_open_13", "Q_open_14", "Q_open_2", "Q_open_3", "Q_open_4", "Q_open_5", "Q_open_6",
    "Q_open_7", "Q_open_8", "Q_open_9", "R_aaba_recurrent", "R_aaba_variants_aabA", "R_aaba_variants_aabAA",
    "R_rem1_aa", "R_rem1_aab", "R_rem1_aabaa", "R_rem1_aabab", "R_rem1_aabb", "R_rem1_baab", "R_rem1_listed",
    "R_sqfree_pal", "R_ternary_pal", "R_unary_avoid", "R_unary_avoid_search", "S2_abba_avoids",
    "S2_abba_meets", "S2_count_aA", "S2_count_aa", "S2_meets_aAa", "S2_meets_aaa", "T2_item1", "T2_item1_axa",
    "T2_item2_aa", "T2_item2_aab", "T2_item2_aaba", "T2_item2_aabaa", "T2_item2_aabab", "T2_item2_aabb",
    "T2_item2_abab", "T2_item2_abba", "T2_item3_aababb", "T2_item3_aabba", "T2_item3_aabbaa",
    "T2_item3_ababa", "T2_item3_ababba", "T_rsw", "T_rsw_base", "T_unary_1", "T_unary_2",
    "T_unary_2_aperiodic", "T_unary_3", "T_unary_4", "T_unary_unary_alphabet", "T_useful",
};

} // namespace

TEST_CASE("registry census") {
    std::vector<std::string> ids;
    for (const auto& c : lemma_registry())
        ids.push_back(c.id);
    CHECK(ids == kIds);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    for (const auto& c : lemma_registry()) {
        INFO(c.id);
        CHECK(c.informational == c.id.starts_with("Q_open"));
        CHECK_FALSE(c.anchor.empty());
        CHECK_FALSE(c.kind.empty());
        CHECK_FALSE(c.expected.empty());
        CHECK(c.observe);
    }
}

TEST_CASE("report formatting") {
    Report empty;
    CHECK(emit_report(empty, ReportFormat::csv) == "id,anchor,expected,observed,status,ms\n");
    CHECK(empty.all_passed());

    Report one;
    one.rows.push_back({"X_1", "a, \"quoted\" claim", "s", "avoids", "avoids", "pass", 12.345});
    CHECK(emit_report(one, ReportFormat::csv) ==
          "id,anchor,expected,observed,status,ms\n"
          "X_1,\"a, \"\"quoted\"\" claim\",avoids,avoids,pass,12.3\n");
    CHECK(emit_report(one, ReportFormat::markdown) ==
          "| id | anchor | expected | observed | status | ms |\n"
          "|---|---|---|---|---|---|\n"
          "| X_1 | a, \"quoted\" claim | avoids | avoids | pass | 12.3 |\n");
    CHECK(one.all_passed());
    one.rows.push_back({"X_2", "b|c", "s", "avoids", "meets", "fail", 0});
    CHECK_FALSE(one.all_passed());
    CHECK(one.count("fail") == 1);
    CHECK(emit_report(one, ReportFormat::markdown).find("b\\|c") != std::string::npos);
}

TEST_CASE("run_suite arguments") {
    const Report r = run_suite("NOPE", 100, 10);
    CHECK(r.rows.empty());
    CHECK(r.unknown_filter);
    CHECK_FALSE(r.all_passed());
    CHECK_THROWS_AS(run_suite("", 99, 10), DomainError);
    CHECK_THROWS_AS(run_suite("", 100, 0), DomainError);
}

TEST_CASE("filtered rows pass at small scale") {
    for (const char* f : {"S2", "L12_1", "T_rsw", "L_suffix01_finite", "CONSEQ_L5_1", "L_aabab"}) {
        const Report r = run_suite(f, 1000, 200);
        INFO(f);
        REQUIRE_FALSE(r.rows.empty());
        for (const auto& row : r.rows) {
            INFO(row.id << " observed " << row.observed);
            CHECK(row.status == "pass");
        }
    }
    const Report q = run_suite("Q_open_1", 500, 50);
    REQUIRE(q.rows.size() >= 1);
    for (const auto& row : q.rows)
        CHECK(row.status == "info");
}

TEST_CASE("avoidance rows are stable when the prefix doubles") {
    const Report a = run_suite("L12", 500, 100), b = run_suite("L12", 1000, 100);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (b.rows[i].observed == "avoids")
            CHECK(a.rows[i].observed == "avoids");
}
