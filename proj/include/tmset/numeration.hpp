#ifndef TMSET_NUMERATION_HPP
#define TMSET_NUMERATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tmset {

// Arbitrary-precision integer. Candidate multiples grow like 2^(p*N), so
// machine words are not enough for the decision procedure.
using Int = boost::multiprecision::cpp_int;

/// State letters of the Thue-Morse automaton: T ("top") is the accepting
/// parity, B ("bottom") the other one.
enum class Parity : int { T = 0, B = 1 };

inline Parity flip(Parity x) { return x == Parity::T ? Parity::B : Parity::T; }

bool thue_member(std::uint64_t n);
bool thue_member(const Int& n);

/// X stays put when n is in the Thue-Morse set and flips otherwise.
Parity apply_parity(Parity x, std::uint64_t n);
Parity apply_parity(Parity x, const Int& n);

/// Canonical base-b expansion, most significant digit first. rep(0) is the
/// empty word.
std::vector<int> rep(Int n, int base);

/// Value of a digit word (leading zeros allowed). Throws
/// std::invalid_argument if a digit is out of [0, base).
Int val(std::span<const int> word, int base);

/// A pair of equal-length digit words, zero-padded on the left.
struct PairWord {
    std::vector<int> first;
    std::vector<int> second;
};

PairWord rep_pair(const Int& a, const Int& b, int base);

/// m written as odd_part * 2^twos with odd_part odd.
struct MultipleDecomposition {
    Int m;
    Int odd_part;
    unsigned twos = 0;
};

/// Throws std::domain_error for m < 1.
MultipleDecomposition decompose(const Int& m);

/// Membership in the digit-counting family: the number of occurrences of
/// `digit` in rep(n, base) is congruent to `remainder` modulo `modulus`.
/// Throws std::domain_error on out-of-range parameters.
bool letter_count_member(const Int& n, int base, int digit, int modulus,
                         int remainder);

}  // namespace tmset

#endif
