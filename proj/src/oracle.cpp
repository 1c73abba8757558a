#include "tmset/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "tmset/automaton_ops.hpp"
#include "tmset/constructions.hpp"

namespace tmset {

bool is_thue_multiple(const Int& n, const Int& m) {
    if (m < 1) throw std::domain_error("is_thue_multiple: m must be positive");
    if (n % m != 0) return false;
    return thue_member(n / m);
}

VerifyReport verify_dfa_against_set(const Dfa& a,
                                    const std::function<bool(std::uint64_t)>& member,
                                    int base, std::uint64_t max_value) {
    VerifyReport report;
    for (std::uint64_t n = 0; n <= max_value; ++n) {
        std::vector<int> digits = rep(Int(n), base);
        bool expected = member(n);
        for (int padding = 0; padding <= 2; ++padding) {
            std::vector<int> word(padding, 0);
            word.insert(word.end(), digits.begin(), digits.end());
            if (accepts(a, word) != expected) {
                report.pass = false;
                report.counterexample_value = n;
                std::ostringstream text;
                for (size_t i = 0; i < word.size(); ++i) {
                    if (i) text << '.';
                    text << word[i];
                }
                report.counterexample_word = text.str();
                return report;
            }
            ++report.words_checked;
        }
    }
    return report;
}

CrossCheckReport cross_check_thue_multiple(long long m, int p) {
    CrossCheckReport report;
    report.suite = "mt";
    report.m = m;
    report.param = p;
    report.formula_value =
        static_cast<long long>(state_complexity_thue_multiple(Int(m), p));
    Dfa minimized = minimize(build_projected_product(m, p));
    Dfa direct = build_minimal_thue_multiple_dfa(Int(m), p);
    report.oracle_value = minimized.state_count();
    report.direct_value = direct.state_count();
    report.isomorphic_check = isomorphic(minimized, direct);
    report.pass = report.formula_value == report.oracle_value &&
                  report.oracle_value == *report.direct_value &&
                  *report.isomorphic_check;
    return report;
}

CrossCheckReport cross_check_divisibility(long long m, int b) {
    CrossCheckReport report;
    report.suite = "mn";
    report.m = m;
    report.param = b;
    report.formula_value =
        static_cast<long long>(state_complexity_divisibility(Int(m), Int(b)));
    report.oracle_value =
        minimize(complete(build_divisibility_dfa(m, b))).state_count();
    report.pass = report.formula_value == report.oracle_value;
    return report;
}

std::vector<CrossCheckReport> run_thue_multiple_suite(long long m_max, int p_max) {
    std::vector<CrossCheckReport> reports;
    for (long long m = 1; m <= m_max; ++m)
        for (int p = 1; p <= p_max; ++p)
            reports.push_back(cross_check_thue_multiple(m, p));
    return reports;
}

std::vector<CrossCheckReport> run_divisibility_suite(long long m_max,
                                                     const std::vector<int>& bases) {
    std::vector<CrossCheckReport> reports;
    for (long long m = 1; m <= m_max; ++m)
        for (int b : bases) reports.push_back(cross_check_divisibility(m, b));
    return reports;
}

std::vector<ConjectureScanRow> conjecture_scan(long long q, int p, int digit,
                                               int modulus, int remainder,
                                               long long m_max) {
    if (q < 2 || p < 1)
        throw std::domain_error("conjecture_scan: base parameters out of range");
    long long base = 1;
    for (int i = 0; i < p; ++i) {
        base *= q;
        if (base > (1 << 20))
            throw std::overflow_error("conjecture_scan: base too large");
    }
    Dfa set_dfa =
        build_letter_count_dfa(static_cast<int>(base), digit, modulus, remainder);
    std::vector<ConjectureScanRow> rows;
    for (long long m = 1; m <= m_max; ++m) {
        ConjectureScanRow row;
        row.m = m;
        row.measured =
            build_multiple_of_set_dfa(set_dfa, m, static_cast<int>(base))
                .state_count();
        row.conjectured =
            static_cast<long long>(conjecture_formula(Int(m), q, p, modulus));
        row.agree = row.measured == row.conjectured;
        rows.push_back(row);
    }
    return rows;
}

bool all_pass(const std::vector<CrossCheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CrossCheckReport& r) { return r.pass; });
}

std::string reports_to_csv(const std::vector<CrossCheckReport>& reports) {
    std::ostringstream out;
    out << "suite,m,param,formula,minimized,direct,isomorphic,pass\n";
    for (const auto& r : reports) {
        out << r.suite << ',' << r.m << ',' << r.param << ',' << r.formula_value
            << ',' << r.oracle_value << ',';
        if (r.direct_value) out << *r.direct_value;
        out << ',';
        if (r.isomorphic_check) out << (*r.isomorphic_check ? "true" : "false");
        out << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string reports_to_text(const std::vector<CrossCheckReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.pass ? "pass" : "FAIL") << "  suite=" << r.suite
            << " m=" << r.m << (r.suite == "mt" ? " p=" : " b=") << r.param
            << " formula=" << r.formula_value << " minimized=" << r.oracle_value;
        if (r.direct_value) out << " direct=" << *r.direct_value;
        if (r.isomorphic_check)
            out << " isomorphic=" << (*r.isomorphic_check ? "yes" : "no");
        out << '\n';
    }
    return out.str();
}

std::string scan_to_csv(const std::vector<ConjectureScanRow>& rows) {
    std::ostringstream out;
    out << "m,measured,conjectured,agree\n";
    for (const auto& r : rows)
        out << r.m << ',' << r.measured << ',' << r.conjectured << ','
            << (r.agree ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace tmset
