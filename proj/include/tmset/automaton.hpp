#ifndef TMSET_AUTOMATON_HPP
#define TMSET_AUTOMATON_HPP

#include <span>
#include <string>
#include <vector>

namespace tmset {

inline constexpr int no_transition = -1;

/// Deterministic finite automaton with integer states and letters. The
/// transition table is dense; missing transitions are marked with
/// no_transition, so partial automata are first-class citizens.
struct Dfa {
    int alphabet_size = 1;
    int initial = 0;
    std::vector<bool> finals;         // one flag per state
    std::vector<int> delta;           // state_count * alphabet_size entries
    std::vector<std::string> labels;  // optional; empty or one per state

    int state_count() const { return static_cast<int>(finals.size()); }

    int next(int state, int letter) const {
        return delta[static_cast<size_t>(state) * alphabet_size + letter];
    }
    void set_next(int state, int letter, int target) {
        delta[static_cast<size_t>(state) * alphabet_size + letter] = target;
    }
    bool is_final(int state) const { return finals[static_cast<size_t>(state)]; }
};

/// Nondeterministic counterpart; produced by projection, consumed by the
/// subset construction. Single initial state.
struct Nfa {
    int alphabet_size = 1;
    int initial = 0;
    std::vector<bool> finals;
    std::vector<std::vector<int>> delta;  // state_count * alphabet_size slots

    int state_count() const { return static_cast<int>(finals.size()); }

    const std::vector<int>& targets(int state, int letter) const {
        return delta[static_cast<size_t>(state) * alphabet_size + letter];
    }
    void add_transition(int state, int letter, int target);
};

/// Bijection between digit pairs (d, e) over [0, base) and the letters of
/// the pair alphabet [0, base^2): encode(d, e) = d * base + e.
struct PairAlphabetCodec {
    int base = 2;

    int alphabet_size() const { return base * base; }
    int encode(int d, int e) const { return d * base + e; }
    int first(int letter) const { return letter / base; }
    int second(int letter) const { return letter % base; }
};

/// DFA with `states` states, all transitions undefined, no finals.
Dfa make_dfa(int states, int alphabet_size, int initial);

/// Throws std::invalid_argument naming the violated structural invariant.
void validate(const Dfa& a);

/// End state of the run from `state`, or no_transition if the run dies.
/// Throws std::invalid_argument on letters outside the alphabet.
int run_from(const Dfa& a, int state, std::span<const int> word);

bool accepts(const Dfa& a, std::span<const int> word);
bool accepts_from(const Dfa& a, int state, std::span<const int> word);

bool is_accessible(const Dfa& a);
bool is_coaccessible(const Dfa& a);
bool is_complete(const Dfa& a);

/// States reachable from the initial state.
std::vector<bool> accessible_states(const Dfa& a);
/// States from which some final state is reachable.
std::vector<bool> coaccessible_states(const Dfa& a);

/// All accepted words of length <= max_len, in length-lexicographic order.
std::vector<std::vector<int>> enumerate_accepted(const Dfa& a, int max_len);

}  // namespace tmset

#endif
