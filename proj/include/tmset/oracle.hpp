#ifndef TMSET_ORACLE_HPP
#define TMSET_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tmset/automaton.hpp"
#include "tmset/numeration.hpp"

namespace tmset {

/// Ground truth by integer arithmetic alone: n is a Thue-Morse multiple of m
/// exactly when m divides n and n/m has an even binary digit sum.
bool is_thue_multiple(const Int& n, const Int& m);

struct VerifyReport {
    bool pass = true;
    std::uint64_t words_checked = 0;
    // First disagreement, when pass is false.
    std::string counterexample_word;
    std::uint64_t counterexample_value = 0;
};

/// Checks accepts(a, 0^j rep(n)) == member(n) for every n <= max_value and
/// every padding j in {0, 1, 2}.
VerifyReport verify_dfa_against_set(const Dfa& a,
                                    const std::function<bool(std::uint64_t)>& member,
                                    int base, std::uint64_t max_value);

/// Formula value vs. Hopcroft-minimized construction (vs. the direct class
/// quotient where one exists). The minimizer is the ground truth: any
/// disagreement fails the report, never the other way around.
struct CrossCheckReport {
    std::string suite;  // "mt" or "mn"
    long long m = 1;
    int param = 1;  // p for the mt suite, b for the mn suite
    long long formula_value = 0;
    long long oracle_value = 0;
    std::optional<long long> direct_value;
    std::optional<bool> isomorphic_check;
    bool pass = false;
};

CrossCheckReport cross_check_thue_multiple(long long m, int p);
CrossCheckReport cross_check_divisibility(long long m, int b);

std::vector<CrossCheckReport> run_thue_multiple_suite(long long m_max, int p_max);
std::vector<CrossCheckReport> run_divisibility_suite(long long m_max,
                                                     const std::vector<int>& bases);

/// One line of the digit-counting-family scan: measured minimal size of the
/// multiple-of-set automaton against the conjectured closed form. The scan
/// reports and never asserts.
struct ConjectureScanRow {
    long long m = 1;
    long long measured = 0;
    long long conjectured = 0;
    bool agree = false;
};

std::vector<ConjectureScanRow> conjecture_scan(long long q, int p, int digit,
                                               int modulus, int remainder,
                                               long long m_max);

bool all_pass(const std::vector<CrossCheckReport>& reports);

std::string reports_to_csv(const std::vector<CrossCheckReport>& reports);
std::string reports_to_text(const std::vector<CrossCheckReport>& reports);
std::string scan_to_csv(const std::vector<ConjectureScanRow>& rows);

}  // namespace tmset

#endif
