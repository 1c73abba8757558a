#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "test_util.hpp"
#include "tmset/automaton_ops.hpp"
#include "tmset/constructions.hpp"
#include "tmset/numeration.hpp"

using namespace tmset;

namespace {

// Universal one-state automaton over the given alphabet.
Dfa universal_dfa(int alphabet) {
    Dfa a = make_dfa(1, alphabet, 0);
    a.finals[0] = true;
    for (int c = 0; c < alphabet; ++c) a.set_next(0, c, 0);
    return a;
}

bool same_language_up_to(const Dfa& a, const Dfa& b, int max_len) {
    for (const auto& w : test::all_words(a.alphabet_size, max_len))
        if (accepts(a, w) != accepts(b, w)) return false;
    return true;
}

// Number of distinct residual languages observed through words of bounded
// length: reach every prefix, fingerprint by acceptance of every suffix.
// Exact for small automata; the independent check that minimize is minimal.
int residual_count(const Dfa& a, int prefix_len, int suffix_len) {
    Dfa c = complete(a);
    auto suffixes = test::all_words(c.alphabet_size, suffix_len);
    std::set<std::vector<bool>> signatures;
    std::set<int> visited;
    for (const auto& w : test::all_words(c.alphabet_size, prefix_len)) {
        int q = run_from(c, c.initial, w);
        if (!visited.insert(q).second) continue;
        std::vector<bool> signature;
        signature.reserve(suffixes.size());
        for (const auto& s : suffixes) signature.push_back(accepts_from(c, q, s));
        signatures.insert(std::move(signature));
    }
    return static_cast<int>(signatures.size());
}

}  // namespace

TEST_CASE("complete adds at most one sink") {
    Dfa mult = build_mult_pair_dfa(6, 4);
    Dfa filled = complete(mult);
    CHECK(filled.state_count() == 7);
    CHECK(is_complete(filled));
    CHECK(same_language_up_to(mult, filled, 6));
    // Already complete: unchanged.
    Dfa div = build_divisibility_dfa(6, 4);
    CHECK(complete(div).state_count() == div.state_count());
}

TEST_CASE("trim removes exactly the completion sink") {
    Dfa mult = build_mult_pair_dfa(6, 4);
    Dfa trimmed = trim(complete(mult));
    CHECK(trimmed.state_count() == 6);
    CHECK(isomorphic(trimmed, mult));
    CHECK(same_language_up_to(trimmed, mult, 6));
}

TEST_CASE("trim is a fixed point on trim automata") {
    Dfa div = build_divisibility_dfa(5, 2);
    Dfa trimmed = trim(div);
    CHECK(trimmed.state_count() == div.state_count());
    CHECK(trimmed.delta == div.delta);
}

TEST_CASE("trim of an empty language is the one-state convention") {
    Dfa a = make_dfa(3, 2, 0);  // no finals at all
    a.set_next(0, 0, 1);
    a.set_next(1, 0, 2);
    Dfa trimmed = trim(a);
    CHECK(trimmed.state_count() == 1);
    CHECK_FALSE(trimmed.is_final(0));
    for (int c = 0; c < 2; ++c) CHECK(trimmed.next(0, c) == no_transition);
}

TEST_CASE("trim keeps both reachability predicates true") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        Dfa a = test::random_partial_dfa(rng, 8, 3);
        Dfa t = trim(a);
        CHECK(is_accessible(t));
        bool empty_language = t.state_count() == 1 && !t.is_final(0);
        if (!empty_language) CHECK(is_coaccessible(t));
        CHECK(same_language_up_to(a, t, 6));
    }
}

TEST_CASE("product with the universal automaton is the identity") {
    Dfa div = build_divisibility_dfa(5, 3);
    CHECK(isomorphic(product(div, universal_dfa(3)), div));
}

TEST_CASE("product rejects alphabet mismatches") {
    CHECK_THROWS_AS(product(build_thue_dfa(1), build_thue_dfa(2)),
                    std::invalid_argument);
}

TEST_CASE("product of the multiplication and Thue-Morse pair automata") {
    Dfa prod = product(build_mult_pair_dfa(6, 4), build_thue_pair_dfa(2));
    CHECK(prod.state_count() == 12);
    CHECK(is_accessible(prod));
    // The generic product and the direct construction agree.
    CHECK(isomorphic(prod, build_product(6, 2)));
}

TEST_CASE("product language is the intersection") {
    std::mt19937 rng(21);
    for (int round = 0; round < 30; ++round) {
        Dfa a = test::random_partial_dfa(rng, 5, 2);
        Dfa b = test::random_partial_dfa(rng, 4, 2);
        Dfa prod = product(a, b);
        for (const auto& w : test::all_words(2, 8))
            REQUIRE(accepts(prod, w) == (accepts(a, w) && accepts(b, w)));
    }
}

TEST_CASE("projection keeps the requested component") {
    PairAlphabetCodec codec{4};
    Dfa mult = build_mult_pair_dfa(6, 4);
    SUBCASE("second component projection is deterministic") {
        Nfa nfa = project(mult, PairComponent::second, codec);
        for (int q = 0; q < nfa.state_count(); ++q)
            for (int e = 0; e < 4; ++e)
                REQUIRE(nfa.targets(q, e).size() <= 1);
    }
    SUBCASE("first component projection is nondeterministic") {
        // From residue 0 every second digit shares first digit 0.
        Nfa nfa = project(mult, PairComponent::first, codec);
        CHECK(nfa.targets(0, 0).size() == 4);
    }
    SUBCASE("wrong codec base is rejected") {
        CHECK_THROWS_AS(project(mult, PairComponent::second, PairAlphabetCodec{3}),
                        std::invalid_argument);
    }
}

TEST_CASE("determinize of a deterministic NFA is isomorphic to its trim part") {
    PairAlphabetCodec codec{4};
    Dfa mult = build_mult_pair_dfa(6, 4);
    Nfa nfa = project(mult, PairComponent::second, codec);
    Dfa det = determinize(nfa);
    // The projection of the multiplication automaton is the divisibility
    // automaton.
    CHECK(isomorphic(det, build_divisibility_dfa(6, 4)));
}

namespace {

bool nfa_accepts(const Nfa& n, const std::vector<int>& word) {
    std::set<int> current{n.initial};
    for (int letter : word) {
        std::set<int> next;
        for (int q : current)
            for (int t : n.targets(q, letter)) next.insert(t);
        current = std::move(next);
    }
    for (int q : current)
        if (n.finals[q]) return true;
    return false;
}

}  // namespace

TEST_CASE("determinize preserves the language") {
    std::mt19937 rng(5);
    for (int round = 0; round < 20; ++round) {
        // Second projection of a lifted automaton branches on every letter
        // the source state can read: genuinely nondeterministic.
        Dfa base = test::random_partial_dfa(rng, 5, 3, 0.8);
        Nfa nfa = project(lift_to_pair_first(base), PairComponent::second,
                          PairAlphabetCodec{3});
        Dfa det = determinize(nfa);
        for (const auto& w : test::all_words(3, 6))
            REQUIRE(accepts(det, w) == nfa_accepts(nfa, w));
    }
}

TEST_CASE("determinized second projection equals the direct projected product") {
    for (long long m = 1; m <= 16; ++m)
        for (int p = 1; p <= 2; ++p) {
            CAPTURE(m);
            CAPTURE(p);
            PairAlphabetCodec codec{1 << p};
            Nfa nfa = project(build_product(m, p), PairComponent::second, codec);
            Dfa det = determinize(nfa);
            REQUIRE(isomorphic(det, build_projected_product(m, p)));
        }
}

TEST_CASE("minimize is idempotent") {
    Dfa m1 = minimize(build_projected_product(12, 2));
    CHECK(isomorphic(minimize(m1), m1));
    CHECK(minimize(m1).delta == m1.delta);  // canonical: equal bytes
}

TEST_CASE("minimize collapses the projected product to the closed form") {
    CHECK(minimize(build_projected_product(6, 2)).state_count() == 7);
    CHECK(minimize(build_projected_product(24, 2)).state_count() == 8);
}

TEST_CASE("minimize matches exhaustive residual counting on small cases") {
    std::vector<Dfa> corpus = {
        build_thue_dfa(1),
        build_divisibility_dfa(4, 2),
        build_divisibility_dfa(6, 2),
        build_projected_product(2, 1),
        build_projected_product(3, 1),
        build_minimal_thue_multiple_dfa(Int(4), 1),
    };
    for (const Dfa& a : corpus) {
        Dfa minimal = minimize(a);
        REQUIRE(minimal.state_count() <= 8);
        REQUIRE(minimal.state_count() == residual_count(a, 8, 8));
    }
}

TEST_CASE("minimize handles degenerate block structures") {
    // Empty language: everything collapses to one rejecting state.
    Dfa no_finals = make_dfa(4, 2, 0);
    for (int q = 0; q < 4; ++q)
        for (int c = 0; c < 2; ++c) no_finals.set_next(q, c, (q + c) % 4);
    CHECK(minimize(no_finals).state_count() == 1);
    CHECK_FALSE(minimize(no_finals).is_final(0));

    // Universal language: one accepting state.
    Dfa all_finals = no_finals;
    all_finals.finals.assign(4, true);
    CHECK(minimize(all_finals).state_count() == 1);
    CHECK(minimize(all_finals).is_final(0));

    // Unreachable states do not leak into the result.
    Dfa with_garbage = build_divisibility_dfa(3, 2);
    with_garbage.finals.resize(5, true);
    with_garbage.delta.resize(5 * 2, no_transition);
    with_garbage.set_next(3, 0, 4);
    with_garbage.set_next(4, 1, 3);
    CHECK(minimize(with_garbage).state_count() == 3);
    CHECK(equivalent(with_garbage, build_divisibility_dfa(3, 2)));
}

TEST_CASE("minimize agrees with equivalence across the corpus") {
    std::vector<Dfa> corpus = {
        build_projected_product(3, 1),   build_projected_product(6, 1),
        build_projected_product(12, 1),  build_divisibility_dfa(6, 2),
        build_minimal_thue_multiple_dfa(Int(6), 1),
        build_minimal_thue_multiple_dfa(Int(12), 1),
    };
    for (const Dfa& a : corpus)
        for (const Dfa& b : corpus) {
            bool same = equivalent(a, b);
            REQUIRE(same == isomorphic(minimize(a), minimize(b)));
        }
}

TEST_CASE("minimize output is certifiably minimal on random automata") {
    std::mt19937 rng(31);
    for (int round = 0; round < 40; ++round) {
        Dfa a = round % 2 ? test::random_partial_dfa(rng, 7, 3)
                          : test::random_complete_dfa(rng, 7, 3);
        Dfa minimal = minimize(a);
        REQUIRE(equivalent(minimal, a));
        REQUIRE(is_complete(minimal));
        REQUIRE(is_accessible(minimal));
        // No two states accept the same language.
        for (int p = 0; p < minimal.state_count(); ++p)
            for (int q = p + 1; q < minimal.state_count(); ++q) {
                Dfa from_p = minimal;
                from_p.initial = p;
                Dfa from_q = minimal;
                from_q.initial = q;
                REQUIRE_FALSE(equivalent(from_p, from_q));
            }
        // Canonical form is stable.
        Dfa again = canonicalize(minimal);
        REQUIRE(again.delta == minimal.delta);
        REQUIRE(again.finals == minimal.finals);
    }
}

TEST_CASE("equivalent distinguishes different multiples") {
    CHECK(equivalent(build_projected_product(6, 2), build_projected_product(6, 2)));
    CHECK(equivalent(build_projected_product(6, 2),
                     build_minimal_thue_multiple_dfa(Int(6), 2)));
    // 18 = 6*3 with 3 evil is in 6T but not in 12T.
    CHECK_FALSE(equivalent(build_minimal_thue_multiple_dfa(Int(6), 1),
                           build_minimal_thue_multiple_dfa(Int(12), 1)));
    CHECK_THROWS_AS(equivalent(build_thue_dfa(1), build_thue_dfa(2)),
                    std::invalid_argument);
}

TEST_CASE("isomorphic is permutation invariance") {
    Dfa a = build_divisibility_dfa(5, 2);
    // Relabel states by rotating indices.
    int n = a.state_count();
    Dfa b = make_dfa(n, a.alphabet_size, (a.initial + 1) % n);
    for (int q = 0; q < n; ++q) {
        b.finals[(q + 1) % n] = a.is_final(q);
        for (int c = 0; c < a.alphabet_size; ++c)
            b.set_next((q + 1) % n, c, (a.next(q, c) + 1) % n);
    }
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(build_minimal_thue_multiple_dfa(Int(6), 2),
                           build_minimal_thue_multiple_dfa(Int(12), 2)));
}

TEST_CASE("disjoint states") {
    CHECK(disjoint_states(build_thue_pair_dfa(1)));
    CHECK(disjoint_states(build_thue_pair_dfa(2)));
    CHECK(disjoint_states(build_mult_pair_dfa(6, 4)));
    // gcd(6,4) > 1: residues 0 and 3 share accepted words.
    CHECK_FALSE(disjoint_states(build_divisibility_dfa(6, 4)));
    CHECK(disjoint_states(build_divisibility_dfa(5, 4)));
}

TEST_CASE("disjoint states plus co-accessibility means Hopcroft keeps all apart") {
    for (long long m : {2, 3, 5, 6, 10}) {
        Dfa mult = build_mult_pair_dfa(m, 4);
        REQUIRE(disjoint_states(mult));
        REQUIRE(is_coaccessible(mult));
        // Completion adds one sink; every original state stays separate.
        REQUIRE(minimize(mult).state_count() == mult.state_count() + 1);
    }
}

TEST_CASE("lift then project(first) round trips") {
    Dfa thue = build_thue_dfa(2);
    Dfa lifted = lift_to_pair_first(thue);
    CHECK(lifted.alphabet_size == 16);
    Nfa back = project(lifted, PairComponent::first, PairAlphabetCodec{4});
    Dfa det = determinize(back);
    CHECK(isomorphic(det, thue));
}
