#include "tmset/numeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tmset {

bool thue_member(std::uint64_t n) { return (std::popcount(n) & 1) == 0; }

bool thue_member(const Int& n) {
    unsigned ones = 0;
    for (Int v = n; v != 0; v &= v - 1) ++ones;
    return (ones & 1) == 0;
}

Parity apply_parity(Parity x, std::uint64_t n) {
    return thue_member(n) ? x : flip(x);
}

Parity apply_parity(Parity x, const Int& n) {
    return thue_member(n) ? x : flip(x);
}

std::vector<int> rep(Int n, int base) {
    if (base < 2) throw std::domain_error("rep: base must be at least 2");
    if (n < 0) throw std::domain_error("rep: negative value");
    std::vector<int> digits;
    while (n != 0) {
        digits.push_back(static_cast<int>(n % base));
        n /= base;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int val(std::span<const int> word, int base) {
    if (base < 2) throw std::domain_error("val: base must be at least 2");
    Int result = 0;
    for (int digit : word) {
        if (digit < 0 || digit >= base)
            throw std::invalid_argument("val: digit out of range for base");
        result = result * base + digit;
    }
    return result;
}

PairWord rep_pair(const Int& a, const Int& b, int base) {
    PairWord out{rep(a, base), rep(b, base)};
    size_t len = std::max(out.first.size(), out.second.size());
    out.first.insert(out.first.begin(), len - out.first.size(), 0);
    out.second.insert(out.second.begin(), len - out.second.size(), 0);
    return out;
}

MultipleDecomposition decompose(const Int& m) {
    if (m < 1) throw std::domain_error("decompose: m must be positive");
    unsigned twos = boost::multiprecision::lsb(m);
    return MultipleDecomposition{m, m >> twos, twos};
}

bool letter_count_member(const Int& n, int base, int digit, int modulus,
                         int remainder) {
    if (base < 2) throw std::domain_error("letter_count_member: base < 2");
    if (digit < 0 || digit >= base)
        throw std::domain_error("letter_count_member: digit out of range");
    if (modulus < 2) throw std::domain_error("letter_count_member: modulus < 2");
    if (remainder < 0 || remainder >= modulus)
        throw std::domain_error("letter_count_member: remainder out of range");
    int count = 0;
    for (int d : rep(n, base))
        if (d == digit) count = (count + 1) % modulus;
    return count == remainder;
}

}  // namespace tmset
