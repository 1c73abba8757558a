#include "tmset/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tmset/automaton_ops.hpp"

namespace tmset {

namespace {

constexpr long long table_capacity = 1LL << 27;

void check_table(long long states, long long alphabet, const char* who) {
    if (states <= 0 || alphabet <= 0 || states > table_capacity / alphabet)
        throw std::overflow_error(std::string(who) +
                                  ": transition table exceeds capacity");
}

// Rejects multipliers before any arithmetic on them can overflow.
long long checked_multiplier(long long m, const char* who) {
    if (m < 1) throw std::domain_error(std::string(who) + ": m must be positive");
    if (m > table_capacity)
        throw std::overflow_error(std::string(who) + ": m exceeds capacity");
    return m;
}

int power_of_two_alphabet(int p, const char* who) {
    if (p < 1) throw std::domain_error(std::string(who) + ": p must be positive");
    if (p > 20) throw std::overflow_error(std::string(who) + ": p too large");
    return 1 << p;
}

std::string parity_name(Parity x) { return x == Parity::T ? "T" : "B"; }

std::string product_state_label(long long i, Parity x) {
    return "(" + std::to_string(i) + "," + parity_name(x) + ")";
}

}  // namespace

Dfa build_thue_dfa(int p) {
    int b = power_of_two_alphabet(p, "build_thue_dfa");
    Dfa a = make_dfa(2, b, 0);
    a.finals[0] = true;
    a.labels = {"T", "B"};
    for (int letter = 0; letter < b; ++letter) {
        int target = thue_member(static_cast<std::uint64_t>(letter)) ? 0 : 1;
        a.set_next(0, letter, target);
        a.set_next(1, letter, 1 - target);
    }
    return a;
}

Dfa build_thue_pair_dfa(int p) {
    power_of_two_alphabet(p, "build_thue_pair_dfa");
    check_table(2, 1LL << (2 * p), "build_thue_pair_dfa");
    return lift_to_pair_first(build_thue_dfa(p));
}

Dfa build_mult_pair_dfa(long long m, int b) {
    checked_multiplier(m, "build_mult_pair_dfa");
    if (b < 2) throw std::domain_error("build_mult_pair_dfa: base must be >= 2");
    check_table(m, static_cast<long long>(b) * b, "build_mult_pair_dfa");
    PairAlphabetCodec codec{b};
    Dfa a = make_dfa(static_cast<int>(m), codec.alphabet_size(), 0);
    a.finals[0] = true;
    a.labels.resize(m);
    for (long long i = 0; i < m; ++i) {
        a.labels[i] = std::to_string(i);
        for (int e = 0; e < b; ++e) {
            long long t = b * i + e;
            long long d = t / m;  // always < b since b*i + e <= b*m - 1
            long long j = t % m;
            a.set_next(static_cast<int>(i), codec.encode(static_cast<int>(d), e),
                       static_cast<int>(j));
        }
    }
    return a;
}

Dfa build_divisibility_dfa(long long m, int b) {
    checked_multiplier(m, "build_divisibility_dfa");
    if (b < 2) throw std::domain_error("build_divisibility_dfa: base must be >= 2");
    check_table(m, b, "build_divisibility_dfa");
    Dfa a = make_dfa(static_cast<int>(m), b, 0);
    a.finals[0] = true;
    a.labels.resize(m);
    for (long long i = 0; i < m; ++i) {
        a.labels[i] = std::to_string(i);
        for (int e = 0; e < b; ++e)
            a.set_next(static_cast<int>(i), e,
                       static_cast<int>((b * i + e) % m));
    }
    return a;
}

int product_state_index(long long m, long long i, Parity x) {
    return static_cast<int>(x == Parity::T ? i : m + i);
}

Dfa build_product(long long m, int p) {
    int b = power_of_two_alphabet(p, "build_product");
    checked_multiplier(m, "build_product");
    check_table(2 * m, static_cast<long long>(b) * b, "build_product");
    PairAlphabetCodec codec{b};
    Dfa a = make_dfa(static_cast<int>(2 * m), codec.alphabet_size(),
                     product_state_index(m, 0, Parity::T));
    a.finals[a.initial] = true;
    a.labels.resize(2 * m);
    for (long long i = 0; i < m; ++i)
        for (Parity x : {Parity::T, Parity::B}) {
            int source = product_state_index(m, i, x);
            a.labels[source] = product_state_label(i, x);
            for (int e = 0; e < b; ++e) {
                long long t = b * i + e;
                long long d = t / m;
                long long j = t % m;
                Parity y = apply_parity(x, static_cast<std::uint64_t>(d));
                a.set_next(source, codec.encode(static_cast<int>(d), e),
                           product_state_index(m, j, y));
            }
        }
    return a;
}

Dfa build_projected_product(long long m, int p) {
    int b = power_of_two_alphabet(p, "build_projected_product");
    Dfa pair_dfa = build_product(m, p);
    PairAlphabetCodec codec{b};
    Dfa a = make_dfa(pair_dfa.state_count(), b, pair_dfa.initial);
    a.finals = pair_dfa.finals;
    a.labels = pair_dfa.labels;
    for (int q = 0; q < pair_dfa.state_count(); ++q)
        for (int c = 0; c < pair_dfa.alphabet_size; ++c) {
            int target = pair_dfa.next(q, c);
            if (target == no_transition) continue;
            int e = codec.second(c);
            int previous = a.next(q, e);
            if (previous != no_transition && previous != target)
                throw std::logic_error(
                    "build_projected_product: projection is not deterministic");
            a.set_next(q, e, target);
        }
    if (!is_complete(a))
        throw std::logic_error("build_projected_product: projection not complete");
    return a;
}

std::string ClassId::to_string() const {
    if (kind == Kind::gamma) return "Gamma_" + std::to_string(beta);
    return "[(" + std::to_string(j) + "," + parity_name(x) + ")]";
}

int class_index(const ClassId& id, long long odd_part) {
    if (id.kind == ClassId::Kind::gamma)
        return static_cast<int>(2 * odd_part + id.beta);
    return static_cast<int>((id.x == Parity::T ? 0 : odd_part) + id.j);
}

ClassId classify_state(const ProductState& s, const MultipleDecomposition& d,
                       int p) {
    Int j = s.residue % d.odd_part;
    Int shift = s.residue / d.odd_part;
    Parity base = apply_parity(s.x, shift);
    if (j > table_capacity)
        throw std::overflow_error("classify_state: residue class exceeds capacity");
    if (j != 0 || base == Parity::B)
        return ClassId{ClassId::Kind::residue_pair,
                       static_cast<long long>(j), base, 0};
    if (shift == 0) return ClassId{ClassId::Kind::residue_pair, 0, Parity::T, 0};
    unsigned alpha = d.twos - 1 - boost::multiprecision::lsb(shift);
    return ClassId{ClassId::Kind::gamma, 0, Parity::T,
                   static_cast<int>(alpha / p)};
}

StateClassPartition build_class_partition(long long m, int p) {
    checked_multiplier(m, "build_class_partition");
    if (p < 1) throw std::domain_error("build_class_partition: p must be positive");
    MultipleDecomposition d = decompose(Int(m));
    long long k = static_cast<long long>(d.odd_part);
    unsigned z = d.twos;
    long long block = 1LL << z;  // members per residue pair class
    int tail_classes = static_cast<int>((z + p - 1) / p);

    StateClassPartition out;
    out.m = m;
    out.p = p;

    for (Parity x : {Parity::T, Parity::B})
        for (long long j = 0; j < k; ++j) {
            ClassId id{ClassId::Kind::residue_pair, j, x, 0};
            std::vector<ProductState> members;
            if (j == 0 && x == Parity::T) {
                members.push_back({Int(0), Parity::T});
            } else {
                for (long long shift = 0; shift < block; ++shift)
                    members.push_back(
                        {Int(j + k * shift),
                         apply_parity(x, static_cast<std::uint64_t>(shift))});
            }
            out.classes.emplace_back(id, std::move(members));
        }

    // Pre-classes alpha = 0 .. z-1 grouped p at a time, the last tail class
    // absorbing the remainder.
    for (int beta = 0; beta < tail_classes; ++beta) {
        ClassId id{ClassId::Kind::gamma, 0, Parity::T, beta};
        std::vector<ProductState> members;
        unsigned alpha_end =
            std::min<unsigned>(z, static_cast<unsigned>(beta + 1) * p);
        for (unsigned alpha = static_cast<unsigned>(beta) * p; alpha < alpha_end;
             ++alpha)
            for (long long shift = 0; shift < (1LL << alpha); ++shift)
                members.push_back(
                    {Int(k * (1LL << (z - alpha - 1)) + k * (1LL << (z - alpha)) * shift),
                     apply_parity(Parity::B, static_cast<std::uint64_t>(shift))});
        out.classes.emplace_back(id, std::move(members));
    }

    // Validation: the classes must partition all 2m states and there must be
    // exactly 2k + ceil(z/p) of them.
    if (static_cast<long long>(out.classes.size()) != 2 * k + tail_classes)
        throw std::logic_error("build_class_partition: wrong class count");
    std::vector<char> covered(2 * m, 0);
    for (const auto& [id, members] : out.classes) {
        if (members.empty())
            throw std::logic_error("build_class_partition: empty class");
        for (const ProductState& s : members) {
            int idx = product_state_index(m, static_cast<long long>(s.residue), s.x);
            if (covered[idx])
                throw std::logic_error("build_class_partition: classes overlap");
            covered[idx] = 1;
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw std::logic_error("build_class_partition: classes do not cover");
    return out;
}

Dfa build_minimal_thue_multiple_dfa(const Int& m, int p) {
    int b = power_of_two_alphabet(p, "build_minimal_thue_multiple_dfa");
    MultipleDecomposition d = decompose(m);
    if (d.odd_part > table_capacity)
        throw std::overflow_error(
            "build_minimal_thue_multiple_dfa: odd part exceeds capacity");
    long long k = static_cast<long long>(d.odd_part);
    int tail_classes = static_cast<int>((d.twos + p - 1) / p);
    long long states = 2 * k + tail_classes;
    check_table(states, b, "build_minimal_thue_multiple_dfa");

    // One representative per class: (j, X) itself for a residue pair class,
    // the shift-0 member of its first pre-class for a tail class.
    std::vector<ProductState> representative(states);
    std::vector<std::string> labels(states);
    for (Parity x : {Parity::T, Parity::B})
        for (long long j = 0; j < k; ++j) {
            ClassId id{ClassId::Kind::residue_pair, j, x, 0};
            representative[class_index(id, k)] = ProductState{Int(j), x};
            labels[class_index(id, k)] = id.to_string();
        }
    for (int beta = 0; beta < tail_classes; ++beta) {
        ClassId id{ClassId::Kind::gamma, 0, Parity::T, beta};
        representative[class_index(id, k)] = ProductState{
            d.odd_part * (Int(1) << (d.twos - static_cast<unsigned>(beta) * p - 1)),
            Parity::B};
        labels[class_index(id, k)] = id.to_string();
    }

    Dfa a = make_dfa(static_cast<int>(states), b, 0);
    a.finals[0] = true;  // class of (0, T)
    a.labels = std::move(labels);
    for (long long q = 0; q < states; ++q) {
        const ProductState& rep = representative[q];
        for (int e = 0; e < b; ++e) {
            Int t = Int(b) * rep.residue + e;
            Int digit = t / m;
            ProductState target{t % m, apply_parity(rep.x, digit)};
            a.set_next(static_cast<int>(q), e,
                       class_index(classify_state(target, d, p), k));
        }
    }
    return a;
}

Int state_complexity_thue_multiple(const Int& m, int p) {
    if (p < 1)
        throw std::domain_error("state_complexity_thue_multiple: p must be positive");
    MultipleDecomposition d = decompose(m);
    return 2 * d.odd_part + (d.twos + p - 1) / p;
}

Int state_complexity_divisibility(const Int& m, const Int& b) {
    using boost::multiprecision::gcd;
    if (m < 1)
        throw std::domain_error("state_complexity_divisibility: m must be positive");
    if (b < 2)
        throw std::domain_error("state_complexity_divisibility: base must be >= 2");
    // Smallest alpha with (m - b^alpha)/gcd(m, b^alpha) < m/gcd(m, b^(alpha+1)),
    // compared exactly by cross-multiplication. Once b^alpha exceeds m the
    // left side is negative, so the scan terminates.
    int cutoff = -1;
    Int power = 1;  // b^alpha
    int scan_limit = 4 * static_cast<int>(boost::multiprecision::msb(m) + 2);
    for (int alpha = 0; alpha <= scan_limit; ++alpha) {
        Int g_here = gcd(m, power);
        Int g_next = gcd(m, power * b);
        if ((m - power) * g_next < m * g_here) {
            cutoff = alpha;
            break;
        }
        power *= b;
    }
    if (cutoff < 0)
        throw std::logic_error("state_complexity_divisibility: scan did not settle");
    Int total = m / gcd(m, power);
    Int partial_power = 1;
    for (int t = 0; t < cutoff; ++t) {
        total += partial_power / gcd(m, partial_power);
        partial_power *= b;
    }
    return total;
}

SigmaWitness sigma_witness(long long m, int p) {
    int b = power_of_two_alphabet(p, "sigma_witness");
    checked_multiplier(m, "sigma_witness");
    MultipleDecomposition d = decompose(Int(m));
    long long k = static_cast<long long>(d.odd_part);
    unsigned z = d.twos;
    if (k <= 1)
        throw std::domain_error(
            "sigma_witness: no residue witnesses when the odd part is 1");
    SigmaWitness out;
    out.k = k;
    out.z = z;
    out.p = p;
    Int largest = Int(k - 1) << z;
    out.length = static_cast<int>(rep(largest, b).size());
    if (static_cast<unsigned>(out.length) * p < z)
        throw std::logic_error("sigma_witness: word length shorter than the tail");
    Int two_power = Int(1) << (static_cast<unsigned>(out.length) * p - z);
    for (long long j = 0; j < k; ++j) {
        Int image = ((-j * two_power) % k + k) % k;
        out.sigma.push_back(static_cast<long long>(image));
        std::vector<int> word = rep(image << z, b);
        word.insert(word.begin(),
                    static_cast<size_t>(out.length) - word.size(), 0);
        out.words.push_back(std::move(word));
    }
    return out;
}

Dfa build_letter_count_dfa(int b, int digit, int modulus, int remainder) {
    if (b < 2) throw std::domain_error("build_letter_count_dfa: base must be >= 2");
    if (digit == 0)
        throw std::domain_error(
            "build_letter_count_dfa: digit 0 is unsupported (padding would "
            "change the count)");
    if (digit < 0 || digit >= b)
        throw std::domain_error("build_letter_count_dfa: digit out of range");
    if (modulus < 2)
        throw std::domain_error("build_letter_count_dfa: modulus must be >= 2");
    if (remainder < 0 || remainder >= modulus)
        throw std::domain_error("build_letter_count_dfa: remainder out of range");
    check_table(modulus, b, "build_letter_count_dfa");
    Dfa a = make_dfa(modulus, b, 0);
    a.finals[remainder] = true;
    a.labels.resize(modulus);
    for (int s = 0; s < modulus; ++s) {
        a.labels[s] = std::to_string(s);
        for (int letter = 0; letter < b; ++letter)
            a.set_next(s, letter, letter == digit ? (s + 1) % modulus : s);
    }
    return a;
}

Dfa build_multiple_of_set_product(const Dfa& set_dfa, long long m, int b) {
    if (set_dfa.alphabet_size != b)
        throw std::invalid_argument(
            "build_multiple_of_set_product: set automaton alphabet mismatch");
    Dfa set_trim = trim(minimize(set_dfa));
    return product(build_mult_pair_dfa(m, b), lift_to_pair_first(set_trim));
}

Dfa build_multiple_of_set_dfa(const Dfa& set_dfa, long long m, int b) {
    Dfa pair_product = build_multiple_of_set_product(set_dfa, m, b);
    Nfa projected =
        project(pair_product, PairComponent::second, PairAlphabetCodec{b});
    return minimize(determinize(projected));
}

Int conjecture_formula(const Int& m, long long q, int p, int modulus) {
    if (q < 2) throw std::domain_error("conjecture_formula: q must be prime");
    for (long long f = 2; f * f <= q; ++f)
        if (q % f == 0) throw std::domain_error("conjecture_formula: q must be prime");
    if (p < 1) throw std::domain_error("conjecture_formula: p must be positive");
    if (modulus < 2)
        throw std::domain_error("conjecture_formula: modulus must be >= 2");
    if (m < 1) throw std::domain_error("conjecture_formula: m must be positive");
    Int prime_free = m;
    unsigned z = 0;
    while (prime_free % q == 0) {
        prime_free /= q;
        ++z;
    }
    return modulus * prime_free + (z + p - 1) / p;
}

}  // namespace tmset
