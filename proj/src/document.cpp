#include "tmset/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tmset {

namespace {

using ordered_json = nlohmann::ordered_json;

// Upper bound on states * alphabet accepted from untrusted documents.
constexpr long long document_table_capacity = 1LL << 27;

}  // namespace

std::string to_json(const AutomatonDocument& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["alphabet_size"] = doc.dfa.alphabet_size;
    j["state_count"] = doc.dfa.state_count();
    j["initial"] = doc.dfa.initial;
    ordered_json finals = ordered_json::array();
    for (int q = 0; q < doc.dfa.state_count(); ++q)
        if (doc.dfa.is_final(q)) finals.push_back(q);
    j["finals"] = std::move(finals);
    ordered_json transitions = ordered_json::array();
    for (int q = 0; q < doc.dfa.state_count(); ++q)
        for (int c = 0; c < doc.dfa.alphabet_size; ++c) {
            int t = doc.dfa.next(q, c);
            if (t != no_transition)
                transitions.push_back(ordered_json::array({q, c, t}));
        }
    j["transitions"] = std::move(transitions);
    if (!doc.dfa.labels.empty()) j["labels"] = doc.dfa.labels;
    if (!doc.metadata.empty()) {
        ordered_json meta;
        for (const auto& [key, value] : doc.metadata) meta[key] = value;
        j["metadata"] = std::move(meta);
    }
    return j.dump(2) + "\n";
}

AutomatonDocument parse_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("document: not valid JSON: ") +
                                    e.what());
    }
    auto require = [&](const char* field) -> const ordered_json& {
        if (!j.contains(field))
            throw std::invalid_argument(std::string("document: missing field ") +
                                        field);
        return j.at(field);
    };
    // Wrong JSON types (a string where an int belongs, ...) surface as
    // invalid_argument like every other violated invariant.
    auto typed = [](const char* field, auto read) {
        try {
            return read();
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument(
                std::string("document: field has the wrong type: ") + field);
        }
    };

    AutomatonDocument doc;
    doc.format_version = typed("format_version", [&] {
        return require("format_version").get<std::string>();
    });
    if (doc.format_version != "1")
        throw std::invalid_argument("document: unsupported format_version");
    long long alphabet_wide = typed(
        "alphabet_size", [&] { return require("alphabet_size").get<long long>(); });
    long long states_wide = typed(
        "state_count", [&] { return require("state_count").get<long long>(); });
    long long initial_wide =
        typed("initial", [&] { return require("initial").get<long long>(); });
    if (states_wide < 1) throw std::invalid_argument("document: state_count < 1");
    if (alphabet_wide < 1)
        throw std::invalid_argument("document: alphabet_size < 1");
    if (alphabet_wide > document_table_capacity ||
        states_wide > document_table_capacity / alphabet_wide)
        throw std::invalid_argument(
            "document: transition table exceeds capacity");
    if (initial_wide < 0 || initial_wide >= states_wide)
        throw std::invalid_argument("document: initial state out of range");
    int states = static_cast<int>(states_wide);
    int alphabet = static_cast<int>(alphabet_wide);
    doc.dfa = make_dfa(states, alphabet, static_cast<int>(initial_wide));
    for (const auto& f : require("finals")) {
        long long q = typed("finals", [&] { return f.get<long long>(); });
        if (q < 0 || q >= states)
            throw std::invalid_argument("document: final state out of range");
        doc.dfa.finals[static_cast<int>(q)] = true;
    }
    std::set<std::pair<long long, long long>> seen;
    for (const auto& t : require("transitions")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument(
                "document: transition is not a [source, letter, target] triple");
        long long source = typed("transitions", [&] { return t[0].get<long long>(); });
        long long letter = typed("transitions", [&] { return t[1].get<long long>(); });
        long long target = typed("transitions", [&] { return t[2].get<long long>(); });
        if (source < 0 || source >= states || target < 0 || target >= states)
            throw std::invalid_argument("document: transition state out of range");
        if (letter < 0 || letter >= alphabet)
            throw std::invalid_argument("document: transition letter out of range");
        if (!seen.emplace(source, letter).second)
            throw std::invalid_argument(
                "document: duplicate (source, letter) transition");
        doc.dfa.set_next(static_cast<int>(source), static_cast<int>(letter),
                         static_cast<int>(target));
    }
    if (j.contains("labels")) {
        doc.dfa.labels = typed("labels", [&] {
            return j.at("labels").get<std::vector<std::string>>();
        });
        if (doc.dfa.labels.size() != static_cast<size_t>(states))
            throw std::invalid_argument(
                "document: label count differs from state count");
    }
    if (j.contains("metadata"))
        for (const auto& item : j.at("metadata").items()) {
            const ordered_json& value = item.value();
            doc.metadata[item.key()] =
                typed("metadata", [&] { return value.get<std::string>(); });
        }
    return doc;
}

namespace {

std::string dot_escaped(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace

std::string to_dot(const Dfa& a, int pair_base) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  start [shape=none, label=\"\"];\n";
    for (int q = 0; q < a.state_count(); ++q) {
        out << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle")
            << ", label=\"";
        if (!a.labels.empty())
            out << dot_escaped(a.labels[q]);
        else
            out << q;
        out << "\"];\n";
    }
    out << "  start -> q" << a.initial << ";\n";
    for (int q = 0; q < a.state_count(); ++q)
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t == no_transition) continue;
            out << "  q" << q << " -> q" << t << " [label=\"";
            if (pair_base > 0)
                out << '(' << c / pair_base << ',' << c % pair_base << ')';
            else
                out << c;
            out << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace tmset
