#ifndef TMSET_DOCUMENT_HPP
#define TMSET_DOCUMENT_HPP

#include <map>
#include <string>

#include "tmset/automaton.hpp"

namespace tmset {

/// On-disk automaton: the DFA plus free-form metadata (construction name,
/// parameters, pair base). Pair-alphabet letters are stored encoded as
/// d * base + e with "pair_base" recorded in the metadata, so documents are
/// self-describing.
struct AutomatonDocument {
    std::string format_version = "1";
    Dfa dfa;
    std::map<std::string, std::string> metadata;
};

/// Canonical JSON rendering: fixed field order, transitions sorted by
/// (source, letter). Identical documents serialize to identical bytes.
std::string to_json(const AutomatonDocument& doc);

/// Parses and validates; throws std::invalid_argument naming the violated
/// invariant (bad version, out-of-range indices, duplicate transitions, ...).
AutomatonDocument parse_document(const std::string& text);

/// Graphviz rendering: doubled circles for finals, one edge per transition.
/// When pair_base > 0 letters are rendered as "(d,e)".
std::string to_dot(const Dfa& a, int pair_base = 0);

}  // namespace tmset

#endif
