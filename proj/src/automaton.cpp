#include "tmset/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace tmset {

void Nfa::add_transition(int state, int letter, int target) {
    auto& slot = delta[static_cast<size_t>(state) * alphabet_size + letter];
    auto it = std::lower_bound(slot.begin(), slot.end(), target);
    if (it == slot.end() || *it != target) slot.insert(it, target);
}

Dfa make_dfa(int states, int alphabet_size, int initial) {
    Dfa a;
    a.alphabet_size = alphabet_size;
    a.initial = initial;
    a.finals.assign(states, false);
    a.delta.assign(static_cast<size_t>(states) * alphabet_size, no_transition);
    return a;
}

void validate(const Dfa& a) {
    const int n = a.state_count();
    if (n < 1) throw std::invalid_argument("dfa: must have at least one state");
    if (a.alphabet_size < 1)
        throw std::invalid_argument("dfa: alphabet must be nonempty");
    if (a.initial < 0 || a.initial >= n)
        throw std::invalid_argument("dfa: initial state out of range");
    if (a.delta.size() != static_cast<size_t>(n) * a.alphabet_size)
        throw std::invalid_argument("dfa: transition table has wrong size");
    for (int target : a.delta)
        if (target != no_transition && (target < 0 || target >= n))
            throw std::invalid_argument("dfa: transition target out of range");
    if (!a.labels.empty() && a.labels.size() != static_cast<size_t>(n))
        throw std::invalid_argument("dfa: label count differs from state count");
}

int run_from(const Dfa& a, int state, std::span<const int> word) {
    int q = state;
    for (int letter : word) {
        if (letter < 0 || letter >= a.alphabet_size)
            throw std::invalid_argument("run: letter outside the alphabet");
        if (q == no_transition) return no_transition;
        q = a.next(q, letter);
    }
    return q;
}

bool accepts_from(const Dfa& a, int state, std::span<const int> word) {
    int q = run_from(a, state, word);
    return q != no_transition && a.is_final(q);
}

bool accepts(const Dfa& a, std::span<const int> word) {
    return accepts_from(a, a.initial, word);
}

std::vector<bool> accessible_states(const Dfa& a) {
    std::vector<bool> seen(a.state_count(), false);
    std::deque<int> queue{a.initial};
    seen[a.initial] = true;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t != no_transition && !seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<bool> coaccessible_states(const Dfa& a) {
    const int n = a.state_count();
    std::vector<std::vector<int>> preds(n);
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t != no_transition) preds[t].push_back(q);
        }
    std::vector<bool> seen(n, false);
    std::deque<int> queue;
    for (int q = 0; q < n; ++q)
        if (a.is_final(q)) {
            seen[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : preds[q])
            if (!seen[p]) {
                seen[p] = true;
                queue.push_back(p);
            }
    }
    return seen;
}

bool is_accessible(const Dfa& a) {
    auto seen = accessible_states(a);
    return std::find(seen.begin(), seen.end(), false) == seen.end();
}

bool is_coaccessible(const Dfa& a) {
    auto seen = coaccessible_states(a);
    return std::find(seen.begin(), seen.end(), false) == seen.end();
}

bool is_complete(const Dfa& a) {
    return std::find(a.delta.begin(), a.delta.end(), no_transition) ==
           a.delta.end();
}

std::vector<std::vector<int>> enumerate_accepted(const Dfa& a, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    // Depth-first in letter order visits each length level lexicographically,
    // so a per-length collection keeps the overall length-lex order.
    std::vector<std::vector<std::vector<int>>> per_length(max_len + 1);
    auto walk = [&](auto&& self, int q) -> void {
        if (a.is_final(q)) per_length[word.size()].push_back(word);
        if (static_cast<int>(word.size()) == max_len) return;
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t == no_transition) continue;
            word.push_back(c);
            self(self, t);
            word.pop_back();
        }
    };
    walk(walk, a.initial);
    for (auto& bucket : per_length)
        for (auto& w : bucket) out.push_back(std::move(w));
    return out;
}

}  // namespace tmset
