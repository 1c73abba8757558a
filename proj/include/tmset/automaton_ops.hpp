#ifndef TMSET_AUTOMATON_OPS_HPP
#define TMSET_AUTOMATON_OPS_HPP

#include <vector>

#include "tmset/automaton.hpp"

namespace tmset {

/// Total version of `a`: undefined transitions are redirected to one fresh
/// non-final sink. Already-complete automata are returned unchanged.
Dfa complete(const Dfa& a);

/// Restriction to states that are both accessible and co-accessible; may be
/// partial. An empty language collapses to a single non-final state with no
/// transitions.
Dfa trim(const Dfa& a);

/// Renumbers states by breadth-first search from the initial state, letters
/// in increasing order; unreachable states are dropped. Two canonical
/// automata are isomorphic exactly when they are structurally equal.
Dfa canonicalize(const Dfa& a);

/// Synchronized product on the reachable pair states; a transition exists
/// when both factors define it and a pair is final when both components are.
/// Throws std::invalid_argument on alphabet mismatch.
Dfa product(const Dfa& a, const Dfa& b);

enum class PairComponent { first, second };

/// Keeps one component of every pair-alphabet label, yielding an NFA over
/// [0, codec.base). Throws std::invalid_argument unless a.alphabet_size is
/// codec.base squared.
Nfa project(const Dfa& a, PairComponent keep, const PairAlphabetCodec& codec);

/// Subset construction over reachable subsets, numbered breadth-first. The
/// empty subset is never materialized, so the result may be partial.
Dfa determinize(const Nfa& n);

/// Replaces each letter a of `a` by all pairs (a, e): the input automaton
/// drives the first component and ignores the second.
Dfa lift_to_pair_first(const Dfa& a);

/// Hopcroft partition refinement on a complete DFA. Returns the block index
/// of each state; blocks are numbered by their smallest member. Throws
/// std::invalid_argument if `a` is not complete.
std::vector<int> nerode_partition(const Dfa& a);

/// Minimal complete DFA of the language of `a`, canonically numbered.
Dfa minimize(const Dfa& a);

/// Language equality via union-find pairing on the completed automata.
/// Throws std::invalid_argument on alphabet mismatch.
bool equivalent(const Dfa& a, const Dfa& b);

/// Structural equality after canonicalization (labels ignored).
bool isomorphic(const Dfa& a, const Dfa& b);

/// True when the languages accepted from distinct states are pairwise
/// disjoint (stronger than being reduced).
bool disjoint_states(const Dfa& a);

}  // namespace tmset

#endif
