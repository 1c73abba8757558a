// Command-line front end: build the automata of the Thue-Morse multiple
// family, minimize documents, run the decision procedure, and drive the
// cross-check and conjecture-scan suites.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmset/automaton_ops.hpp"
#include "tmset/constructions.hpp"
#include "tmset/decision.hpp"
#include "tmset/document.hpp"
#include "tmset/oracle.hpp"

namespace {

using tmset::AutomatonDocument;
using tmset::Dfa;
using tmset::Int;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

long long to_machine(const Int& value, const char* what) {
    if (value < 0 || value > Int(std::numeric_limits<long long>::max()))
        throw std::domain_error(std::string(what) + " out of machine range");
    return static_cast<long long>(value);
}

struct BuildRequest {
    std::string kind;
    std::string m_text = "1";
    int p = 1;
    int b = 2;
    int digit = 1;
    int modulus = 2;
    int remainder = 0;
    std::string set_path;
    std::string output;
    std::string dot_path;
};

AutomatonDocument run_build(const BuildRequest& req) {
    AutomatonDocument doc;
    Int m(req.m_text);
    doc.metadata["construction"] = req.kind;
    if (req.kind == "thue") {
        doc.dfa = tmset::build_thue_dfa(req.p);
        doc.metadata["p"] = std::to_string(req.p);
    } else if (req.kind == "thue-pair") {
        doc.dfa = tmset::build_thue_pair_dfa(req.p);
        doc.metadata["p"] = std::to_string(req.p);
        doc.metadata["pair_base"] = std::to_string(1 << req.p);
    } else if (req.kind == "mult-pair") {
        doc.dfa = tmset::build_mult_pair_dfa(to_machine(m, "m"), req.b);
        doc.metadata["m"] = req.m_text;
        doc.metadata["b"] = std::to_string(req.b);
        doc.metadata["pair_base"] = std::to_string(req.b);
    } else if (req.kind == "divisibility") {
        doc.dfa = tmset::build_divisibility_dfa(to_machine(m, "m"), req.b);
        doc.metadata["m"] = req.m_text;
        doc.metadata["b"] = std::to_string(req.b);
    } else if (req.kind == "product") {
        doc.dfa = tmset::build_product(to_machine(m, "m"), req.p);
        doc.metadata["m"] = req.m_text;
        doc.metadata["p"] = std::to_string(req.p);
        doc.metadata["pair_base"] = std::to_string(1 << req.p);
    } else if (req.kind == "projected-product") {
        doc.dfa = tmset::build_projected_product(to_machine(m, "m"), req.p);
        doc.metadata["m"] = req.m_text;
        doc.metadata["p"] = std::to_string(req.p);
    } else if (req.kind == "minimal-mt") {
        doc.dfa = tmset::build_minimal_thue_multiple_dfa(m, req.p);
        doc.metadata["m"] = req.m_text;
        doc.metadata["p"] = std::to_string(req.p);
    } else if (req.kind == "letter-count") {
        doc.dfa = tmset::build_letter_count_dfa(req.b, req.digit, req.modulus,
                                                req.remainder);
        doc.metadata["b"] = std::to_string(req.b);
        doc.metadata["c"] = std::to_string(req.digit);
        doc.metadata["M"] = std::to_string(req.modulus);
        doc.metadata["R"] = std::to_string(req.remainder);
    } else if (req.kind == "multiple-of-set") {
        if (req.set_path.empty())
            throw std::invalid_argument("multiple-of-set requires --set FILE");
        AutomatonDocument set_doc = tmset::parse_document(read_input(req.set_path));
        int base = set_doc.dfa.alphabet_size;
        doc.dfa =
            tmset::build_multiple_of_set_dfa(set_doc.dfa, to_machine(m, "m"), base);
        doc.metadata["m"] = req.m_text;
        doc.metadata["b"] = std::to_string(base);
    } else {
        throw std::invalid_argument("unknown build kind: " + req.kind);
    }
    return doc;
}

int pair_base_of(const AutomatonDocument& doc) {
    auto it = doc.metadata.find("pair_base");
    return it == doc.metadata.end() ? 0 : std::stoi(it->second);
}

void emit_document(const AutomatonDocument& doc, const std::string& output,
                   const std::string& dot_path) {
    write_output(output, tmset::to_json(doc));
    if (!dot_path.empty())
        write_output(dot_path, tmset::to_dot(doc.dfa, pair_base_of(doc)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automata of the multiples of the Thue-Morse set"};
    app.require_subcommand(1);

    BuildRequest build_req;
    CLI::App* build = app.add_subcommand(
        "build", "Construct an automaton and print its JSON document");
    build
        ->add_option("kind", build_req.kind,
                     "One of: thue, thue-pair, mult-pair, divisibility, product, "
                     "projected-product, minimal-mt, letter-count, multiple-of-set")
        ->required();
    build->add_option("--m", build_req.m_text, "Multiplier");
    build->add_option("--p", build_req.p, "Base exponent: the base is 2^p");
    build->add_option("--b", build_req.b, "Base");
    build->add_option("--c", build_req.digit, "Counted digit (letter-count)");
    build->add_option("--M", build_req.modulus, "Count modulus (letter-count)");
    build->add_option("--R", build_req.remainder, "Count remainder (letter-count)");
    build->add_option("--set", build_req.set_path,
                      "Set-automaton document (multiple-of-set)");
    build->add_option("-o,--output", build_req.output, "Output file (default stdout)");
    build->add_option("--dot", build_req.dot_path, "Also write a DOT rendering");

    std::string min_input, min_output, min_dot;
    CLI::App* min_cmd = app.add_subcommand(
        "minimize", "Minimize a document into canonical complete form");
    min_cmd->add_option("input", min_input, "Input document ('-' for stdin)");
    min_cmd->add_option("-o,--output", min_output, "Output file (default stdout)");
    min_cmd->add_option("--dot", min_dot, "Also write a DOT rendering");

    std::string decide_input;
    int decide_p = 1;
    bool decide_verbose = false;
    CLI::App* decide = app.add_subcommand(
        "decide", "Decide whether a document is some multiple of the Thue-Morse set");
    decide->add_option("input", decide_input, "Input document ('-' for stdin)");
    decide->add_option("--p", decide_p, "Base exponent: the base is 2^p")->required();
    decide->add_flag("-v,--verbose", decide_verbose, "Show candidates tested");

    std::string check_suite = "all";
    long long check_m_max = 64;
    int check_p_max = 3;
    std::vector<int> check_bases = {2, 3, 4, 5, 8, 10};
    std::string check_output;
    CLI::App* check = app.add_subcommand(
        "check", "Cross-check closed forms against the minimization oracle");
    check->add_option("--suite", check_suite, "mt, mn or all")
        ->check(CLI::IsMember({"mt", "mn", "all"}));
    check->add_option("--m-max", check_m_max, "Largest multiplier");
    check->add_option("--p-max", check_p_max, "Largest base exponent (mt suite)");
    check->add_option("--b-list", check_bases, "Bases for the mn suite")
        ->delimiter(',');
    check->add_option("-o,--output", check_output, "CSV output file (default stdout)");

    long long scan_q = 2;
    int scan_p = 1, scan_digit = 1, scan_modulus = 2, scan_remainder = 0;
    long long scan_m_max = 16;
    std::string scan_output;
    CLI::App* scan = app.add_subcommand(
        "scan", "Measure multiples of a digit-counting set against the "
                "conjectured closed form (report only)");
    scan->add_option("--q", scan_q, "Prime base root")->required();
    scan->add_option("--p", scan_p, "Base exponent: the base is q^p");
    scan->add_option("--c", scan_digit, "Counted digit")->required();
    scan->add_option("--M", scan_modulus, "Count modulus")->required();
    scan->add_option("--R", scan_remainder, "Count remainder");
    scan->add_option("--m-max", scan_m_max, "Largest multiplier");
    scan->add_option("-o,--output", scan_output, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build) {
            emit_document(run_build(build_req), build_req.output,
                          build_req.dot_path);
            return exit_ok;
        }
        if (*min_cmd) {
            AutomatonDocument doc = tmset::parse_document(read_input(min_input));
            doc.dfa = tmset::minimize(doc.dfa);
            emit_document(doc, min_output, min_dot);
            return exit_ok;
        }
        if (*decide) {
            AutomatonDocument doc = tmset::parse_document(read_input(decide_input));
            tmset::DecisionOutcome outcome =
                tmset::decide_thue_multiple(doc.dfa, decide_p);
            if (decide_verbose) {
                std::cerr << "minimized states: " << outcome.minimized_state_count
                          << "\n";
                for (auto [k, z] : outcome.candidates_tested)
                    std::cerr << "candidate k=" << k << " z=" << z << "\n";
            }
            if (outcome.multiple)
                std::cout << "m=" << *outcome.multiple << "\n";
            else
                std::cout << "not-a-multiple\n";
            return exit_ok;
        }
        if (*check) {
            std::vector<tmset::CrossCheckReport> reports;
            if (check_suite == "mt" || check_suite == "all") {
                auto part = tmset::run_thue_multiple_suite(check_m_max, check_p_max);
                reports.insert(reports.end(), part.begin(), part.end());
            }
            if (check_suite == "mn" || check_suite == "all") {
                auto part = tmset::run_divisibility_suite(check_m_max, check_bases);
                reports.insert(reports.end(), part.begin(), part.end());
            }
            write_output(check_output, tmset::reports_to_csv(reports));
            if (tmset::all_pass(reports)) return exit_ok;
            std::cerr << "check: some rows failed\n";
            for (const auto& r : reports)
                if (!r.pass) std::cerr << tmset::reports_to_text({r});
            return exit_check_failed;
        }
        if (*scan) {
            auto rows = tmset::conjecture_scan(scan_q, scan_p, scan_digit,
                                               scan_modulus, scan_remainder,
                                               scan_m_max);
            write_output(scan_output, tmset::scan_to_csv(rows));
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
