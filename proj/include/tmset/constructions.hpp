#ifndef TMSET_CONSTRUCTIONS_HPP
#define TMSET_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "tmset/automaton.hpp"
#include "tmset/numeration.hpp"

namespace tmset {

/// Two-state DFA over [0, 2^p) accepting the padded base-2^p expansions of
/// the Thue-Morse set: reading a letter flips the state exactly when the
/// letter's binary expansion has an odd number of 1s.
Dfa build_thue_dfa(int p);

/// The Thue-Morse automaton lifted to the pair alphabet: (a, e) acts like a
/// for every e. Complete, with disjoint states.
Dfa build_thue_pair_dfa(int p);

/// Multiplication-by-m automaton over the pair alphabet of base b: state i
/// has a transition on (d, e) to j exactly when b*i + e = m*d + j. Accepts
/// the padded expansions of all pairs (n, m*n). Partial: each (state, e)
/// admits exactly one first component d.
Dfa build_mult_pair_dfa(long long m, int b);

/// Complete m-state automaton of the multiples of m in base b:
/// state i reads e into (b*i + e) mod m. Minimal exactly when gcd(m, b) = 1.
Dfa build_divisibility_dfa(long long m, int b);

/// Synchronized product of the multiplication automaton with the pair-lifted
/// Thue-Morse automaton, base 2^p. States (i, X) are numbered i for (i, T)
/// and m + i for (i, B); accepts padded expansions of {(t, m*t) : t evil}.
Dfa build_product(long long m, int p);

/// Second-component projection of build_product: a complete DFA on the same
/// 2m states accepting the padded base-2^p expansions of the multiples of
/// the Thue-Morse set. Throws std::logic_error if projecting ever produces
/// two targets for one (state, letter) slot, which the construction rules out.
Dfa build_projected_product(long long m, int p);

/// State index used by build_product and build_projected_product.
int product_state_index(long long m, long long i, Parity x);

/// One state of the 2m-state projected product.
struct ProductState {
    Int residue;  // i in [0, m)
    Parity x = Parity::T;

    friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// Identifier of a Nerode class of the projected product: either a residue
/// pair class [(j, X)] or a tail class Gamma_beta.
struct ClassId {
    enum class Kind { residue_pair, gamma } kind = Kind::residue_pair;
    long long j = 0;       // residue_pair only
    Parity x = Parity::T;  // residue_pair only
    int beta = 0;          // gamma only

    friend bool operator==(const ClassId&, const ClassId&) = default;
    std::string to_string() const;
};

/// Index of a class in the canonical ordering [(0..k-1, T)], [(0..k-1, B)],
/// Gamma_0.., which is also the state numbering of the direct minimal DFA.
int class_index(const ClassId& id, long long odd_part);

/// The full partition of the 2m projected-product states into residue pair
/// classes and tail classes, in canonical class order.
struct StateClassPartition {
    long long m = 1;
    int p = 1;
    std::vector<std::pair<ClassId, std::vector<ProductState>>> classes;
};

/// Builds and validates the partition (pairwise disjoint, covers all 2m
/// states, 2k + ceil(z/p) classes). Throws std::logic_error on violation.
StateClassPartition build_class_partition(long long m, int p);

/// Constant-time classification of a projected-product state; this is what
/// makes the direct construction work for multipliers far beyond any
/// materializable automaton.
ClassId classify_state(const ProductState& s, const MultipleDecomposition& d,
                       int p);

/// The minimal complete DFA of the base-2^p expansions of the multiples of
/// the Thue-Morse set, built from one representative per class without ever
/// materializing the 2m-state automaton. 2k + ceil(z/p) states.
Dfa build_minimal_thue_multiple_dfa(const Int& m, int p);

/// Closed form 2k + ceil(z/p) for the state complexity of the multiples of
/// the Thue-Morse set in base 2^p, where m = k * 2^z with k odd.
Int state_complexity_thue_multiple(const Int& m, int p);

/// Closed form for the state complexity of the multiples of m in base b:
/// m/gcd(m, b^N) + sum_{t<N} b^t/gcd(m, b^t), with N the smallest alpha such
/// that (m - b^alpha)/gcd(m, b^alpha) < m/gcd(m, b^(alpha+1)).
Int state_complexity_divisibility(const Int& m, const Int& b);

/// Distinguishing words for the residue states of the divisibility automaton
/// in base 2^p: sigma permutes [0, k) and word j, of fixed length, is
/// accepted from state j' exactly when j = j'.
struct SigmaWitness {
    long long k = 1;
    unsigned z = 0;
    int p = 1;
    int length = 0;                       // common word length n
    std::vector<long long> sigma;         // image of each j
    std::vector<std::vector<int>> words;  // one word per j
};

/// Requires k > 1 (throws std::domain_error otherwise); asserts p*n >= z.
SigmaWitness sigma_witness(long long m, int p);

/// Complete modulus-state counter DFA over [0, b) accepting words whose
/// number of occurrences of `digit` is congruent to `remainder`. Rejects
/// digit = 0, where left padding would change the count.
Dfa build_letter_count_dfa(int b, int digit, int modulus, int remainder);

/// Product stage of the general pipeline for an arbitrary recognizable set:
/// the set automaton is minimized and trimmed, lifted to the pair alphabet,
/// and multiplied with the base-b multiplication automaton.
Dfa build_multiple_of_set_product(const Dfa& set_dfa, long long m, int b);

/// Full pipeline: product, second-component projection, subset construction,
/// minimization. Returns the minimal complete DFA of the padded expansions
/// of m * X where X is the set accepted by set_dfa.
Dfa build_multiple_of_set_dfa(const Dfa& set_dfa, long long m, int b);

/// Conjectured state complexity M*k + ceil(z/p) of the multiples of a
/// digit-counting set in base q^p, where m = k * q^z with gcd(k, q) = 1.
/// Advisory value only; throws std::domain_error unless q is prime.
Int conjecture_formula(const Int& m, long long q, int p, int modulus);

}  // namespace tmset

#endif
