#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tmset/automaton_ops.hpp"
#include "tmset/constructions.hpp"
#include "tmset/oracle.hpp"

using namespace tmset;

TEST_CASE("integer membership in the multiples of the Thue-Morse set") {
    CHECK(is_thue_multiple(Int(18), Int(6)));   // 18 = 6*3, 3 is evil
    CHECK_FALSE(is_thue_multiple(Int(6), Int(6)));  // 1 is odious
    for (long long m : {1, 2, 7, 24}) CHECK(is_thue_multiple(Int(0), Int(m)));
    CHECK_FALSE(is_thue_multiple(Int(7), Int(6)));  // not even a multiple
}

TEST_CASE("exhaustive verification passes on correct automata") {
    VerifyReport mt = verify_dfa_against_set(
        build_minimal_thue_multiple_dfa(Int(6), 2),
        [](std::uint64_t n) { return is_thue_multiple(Int(n), Int(6)); }, 4,
        1 << 10);
    CHECK(mt.pass);
    CHECK(mt.words_checked == 3 * (1025));

    VerifyReport div = verify_dfa_against_set(
        build_divisibility_dfa(7, 2), [](std::uint64_t n) { return n % 7 == 0; },
        2, 1 << 10);
    CHECK(div.pass);
}

TEST_CASE("exhaustive verification pinpoints an injected bug") {
    Dfa broken = build_minimal_thue_multiple_dfa(Int(6), 2);
    broken.finals[1] = !broken.finals[1];
    VerifyReport report = verify_dfa_against_set(
        broken, [](std::uint64_t n) { return is_thue_multiple(Int(n), Int(6)); },
        4, 1 << 10);
    REQUIRE_FALSE(report.pass);
    CHECK_FALSE(report.counterexample_word.empty());
    // The reported value really is a disagreement.
    std::uint64_t n = report.counterexample_value;
    bool expected = is_thue_multiple(Int(n), Int(6));
    bool wrong_everywhere = false;
    for (int padding = 0; padding <= 2; ++padding) {
        std::vector<int> w(padding, 0);
        for (int d : rep(Int(n), 4)) w.push_back(d);
        if (accepts(broken, w) != expected) wrong_everywhere = true;
    }
    CHECK(wrong_everywhere);
}

TEST_CASE("thue multiple cross checks") {
    CrossCheckReport r24 = cross_check_thue_multiple(24, 2);
    CHECK(r24.pass);
    CHECK(r24.formula_value == 8);
    CHECK(r24.oracle_value == 8);
    CHECK(*r24.direct_value == 8);
    CHECK(*r24.isomorphic_check);

    CHECK(cross_check_thue_multiple(6, 2).formula_value == 7);
    CHECK(cross_check_thue_multiple(6, 2).pass);
    CHECK(cross_check_thue_multiple(1, 1).formula_value == 2);
    CHECK(cross_check_thue_multiple(1, 1).pass);
}

TEST_CASE("divisibility cross checks") {
    CHECK(cross_check_divisibility(5, 4).pass);
    CHECK(cross_check_divisibility(5, 4).formula_value == 5);
    CHECK(cross_check_divisibility(2, 2).formula_value == 2);
    CHECK(cross_check_divisibility(2, 2).pass);
    CHECK(all_pass(run_divisibility_suite(20, {2, 3, 10})));
}

TEST_CASE("suites aggregate in parameter order") {
    auto reports = run_thue_multiple_suite(4, 2);
    REQUIRE(reports.size() == 8);
    CHECK(reports.front().m == 1);
    CHECK(reports.front().param == 1);
    CHECK(reports.back().m == 4);
    CHECK(reports.back().param == 2);
    CHECK(all_pass(reports));
}

TEST_CASE("conjecture scan agrees on the proven instance") {
    auto rows = conjecture_scan(2, 1, 1, 2, 0, 12);
    REQUIRE(rows.size() == 12);
    for (const auto& row : rows) {
        CAPTURE(row.m);
        REQUIRE(row.agree);
    }
}

TEST_CASE("conjecture scan reports other instances without asserting") {
    auto rows = conjecture_scan(3, 1, 1, 3, 0, 8);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(row.measured >= 1);
        CHECK(row.conjectured >= 1);
    }
}

TEST_CASE("csv and text rendering") {
    auto reports = run_thue_multiple_suite(2, 1);
    std::string csv = reports_to_csv(reports);
    CHECK(csv.rfind("suite,m,param,formula,minimized,direct,isomorphic,pass\n", 0) ==
          0);
    CHECK(csv.find("mt,1,1,2,2,2,true,true") != std::string::npos);

    CrossCheckReport fake;
    fake.suite = "mn";
    fake.m = 9;
    fake.param = 3;
    fake.formula_value = 5;
    fake.oracle_value = 4;
    fake.pass = false;
    std::string text = reports_to_text({fake});
    CHECK(text.find("FAIL") != std::string::npos);
    std::string fake_csv = reports_to_csv({fake});
    CHECK(fake_csv.find("mn,9,3,5,4,,,false") != std::string::npos);

    auto rows = conjecture_scan(2, 1, 1, 2, 0, 3);
    std::string scan_csv = scan_to_csv(rows);
    CHECK(scan_csv.rfind("m,measured,conjectured,agree\n", 0) == 0);
    CHECK(scan_csv.find("1,2,2,true") != std::string::npos);
}
