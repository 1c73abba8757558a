#ifndef TMSET_DECISION_HPP
#define TMSET_DECISION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tmset/automaton.hpp"
#include "tmset/numeration.hpp"

namespace tmset {

/// Result of asking whether a recognizable set equals some multiple of the
/// Thue-Morse set.
struct DecisionOutcome {
    /// The unique multiple when it exists (0 means the language 0*), empty
    /// when the language is no such multiple.
    std::optional<Int> multiple;
    /// (odd part, power-of-two exponent) pairs tested, in test order.
    std::vector<std::pair<long long, int>> candidates_tested;
    int minimized_state_count = 0;
};

/// All (k, z) with k odd and 2k + ceil(z/p) equal to the given state
/// complexity, ordered by increasing k then z. These are the only multiples
/// k * 2^z whose minimal automaton can have that many states.
std::vector<std::pair<long long, int>> candidates_for_complexity(int complexity,
                                                                 int p);

/// Minimal complete DFA of the language 0* (the padded expansions of {0}).
Dfa zero_star_dfa(int alphabet_size);

/// Decides whether the language of `a` is the set of padded base-2^p
/// expansions of m * (Thue-Morse set) for some m, by minimizing the input
/// and comparing it against the directly built minimal automaton of each
/// candidate. Throws std::invalid_argument unless a.alphabet_size == 2^p.
DecisionOutcome decide_thue_multiple(const Dfa& a, int p);

}  // namespace tmset

#endif
