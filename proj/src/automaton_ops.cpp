#include "tmset/automaton_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace tmset {

namespace {

// Keeps the states flagged in `keep`, renumbered in increasing index order.
// The initial state must be kept.
Dfa restrict_states(const Dfa& a, const std::vector<bool>& keep) {
    const int n = a.state_count();
    std::vector<int> remap(n, no_transition);
    int next_id = 0;
    for (int q = 0; q < n; ++q)
        if (keep[q]) remap[q] = next_id++;
    Dfa out = make_dfa(next_id, a.alphabet_size, remap[a.initial]);
    if (!a.labels.empty()) out.labels.resize(next_id);
    for (int q = 0; q < n; ++q) {
        if (!keep[q]) continue;
        out.finals[remap[q]] = a.is_final(q);
        if (!a.labels.empty()) out.labels[remap[q]] = a.labels[q];
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t != no_transition && keep[t]) out.set_next(remap[q], c, remap[t]);
        }
    }
    return out;
}

}  // namespace

Dfa complete(const Dfa& a) {
    if (is_complete(a)) return a;
    const int n = a.state_count();
    const int sink = n;
    Dfa out = make_dfa(n + 1, a.alphabet_size, a.initial);
    out.finals = a.finals;
    out.finals.push_back(false);
    if (!a.labels.empty()) {
        out.labels = a.labels;
        out.labels.emplace_back("sink");
    }
    std::copy(a.delta.begin(), a.delta.end(), out.delta.begin());
    for (auto& target : out.delta)
        if (target == no_transition) target = sink;
    return out;
}

Dfa trim(const Dfa& a) {
    auto fwd = accessible_states(a);
    auto bwd = coaccessible_states(a);
    std::vector<bool> keep(a.state_count());
    bool any = false;
    for (int q = 0; q < a.state_count(); ++q) {
        keep[q] = fwd[q] && bwd[q];
        any = any || keep[q];
    }
    if (!any || !keep[a.initial]) {
        // Empty language: one non-final initial state, no transitions.
        return make_dfa(1, a.alphabet_size, 0);
    }
    return restrict_states(a, keep);
}

Dfa canonicalize(const Dfa& a) {
    const int n = a.state_count();
    std::vector<int> remap(n, no_transition);
    std::vector<int> order;
    order.reserve(n);
    remap[a.initial] = 0;
    order.push_back(a.initial);
    for (size_t head = 0; head < order.size(); ++head) {
        int q = order[head];
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t != no_transition && remap[t] == no_transition) {
                remap[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    Dfa out = make_dfa(static_cast<int>(order.size()), a.alphabet_size, 0);
    if (!a.labels.empty()) out.labels.resize(order.size());
    for (int id = 0; id < static_cast<int>(order.size()); ++id) {
        int q = order[id];
        out.finals[id] = a.is_final(q);
        if (!a.labels.empty()) out.labels[id] = a.labels[q];
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t != no_transition) out.set_next(id, c, remap[t]);
        }
    }
    return out;
}

Dfa product(const Dfa& a, const Dfa& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("product: alphabet mismatch");
    const bool with_labels = !a.labels.empty() && !b.labels.empty();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> order;
    auto intern = [&](int p, int q) {
        auto [it, inserted] = ids.try_emplace({p, q}, static_cast<int>(order.size()));
        if (inserted) order.emplace_back(p, q);
        return it->second;
    };
    intern(a.initial, b.initial);
    std::vector<int> flat_delta;
    for (size_t head = 0; head < order.size(); ++head) {
        auto [p, q] = order[head];
        for (int c = 0; c < a.alphabet_size; ++c) {
            int tp = a.next(p, c);
            int tq = b.next(q, c);
            flat_delta.push_back(tp == no_transition || tq == no_transition
                                     ? no_transition
                                     : intern(tp, tq));
        }
    }
    Dfa out = make_dfa(static_cast<int>(order.size()), a.alphabet_size, 0);
    out.delta = std::move(flat_delta);
    if (with_labels) out.labels.resize(order.size());
    for (int id = 0; id < out.state_count(); ++id) {
        auto [p, q] = order[id];
        out.finals[id] = a.is_final(p) && b.is_final(q);
        if (with_labels)
            out.labels[id] = "(" + a.labels[p] + "," + b.labels[q] + ")";
    }
    return out;
}

Nfa project(const Dfa& a, PairComponent keep, const PairAlphabetCodec& codec) {
    if (a.alphabet_size != codec.alphabet_size())
        throw std::invalid_argument(
            "project: alphabet is not the square of the codec base");
    Nfa out;
    out.alphabet_size = codec.base;
    out.initial = a.initial;
    out.finals = a.finals;
    out.delta.assign(static_cast<size_t>(a.state_count()) * codec.base, {});
    for (int q = 0; q < a.state_count(); ++q)
        for (int c = 0; c < a.alphabet_size; ++c) {
            int t = a.next(q, c);
            if (t == no_transition) continue;
            int letter = keep == PairComponent::first ? codec.first(c)
                                                      : codec.second(c);
            out.add_transition(q, letter, t);
        }
    return out;
}

Dfa determinize(const Nfa& n) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> order;
    auto intern = [&](std::vector<int> subset) {
        auto [it, inserted] =
            ids.try_emplace(std::move(subset), static_cast<int>(order.size()));
        if (inserted) order.push_back(it->first);
        return it->second;
    };
    intern({n.initial});
    std::vector<int> flat_delta;
    for (size_t head = 0; head < order.size(); ++head) {
        std::vector<int> subset = order[head];  // copy: order grows below
        for (int c = 0; c < n.alphabet_size; ++c) {
            std::vector<int> successor;
            for (int q : subset) {
                const auto& targets = n.targets(q, c);
                std::vector<int> merged;
                std::set_union(successor.begin(), successor.end(),
                               targets.begin(), targets.end(),
                               std::back_inserter(merged));
                successor = std::move(merged);
            }
            flat_delta.push_back(successor.empty() ? no_transition
                                                   : intern(std::move(successor)));
        }
    }
    Dfa out = make_dfa(static_cast<int>(order.size()), n.alphabet_size, 0);
    out.delta = std::move(flat_delta);
    for (int id = 0; id < out.state_count(); ++id)
        for (int q : order[id])
            if (n.finals[q]) {
                out.finals[id] = true;
                break;
            }
    return out;
}

Dfa lift_to_pair_first(const Dfa& a) {
    PairAlphabetCodec codec{a.alphabet_size};
    Dfa out = make_dfa(a.state_count(), codec.alphabet_size(), a.initial);
    out.finals = a.finals;
    out.labels = a.labels;
    for (int q = 0; q < a.state_count(); ++q)
        for (int d = 0; d < a.alphabet_size; ++d) {
            int t = a.next(q, d);
            if (t == no_transition) continue;
            for (int e = 0; e < a.alphabet_size; ++e)
                out.set_next(q, codec.encode(d, e), t);
        }
    return out;
}

std::vector<int> nerode_partition(const Dfa& a) {
    if (!is_complete(a))
        throw std::invalid_argument("nerode_partition: automaton must be complete");
    const int n = a.state_count();
    const int sigma = a.alphabet_size;

    // Inverse transitions, flattened per letter.
    std::vector<std::vector<std::vector<int>>> inv(
        sigma, std::vector<std::vector<int>>(n));
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < sigma; ++c) inv[c][a.next(q, c)].push_back(q);

    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(n, -1);
    std::vector<int> finals_block, others_block;
    for (int q = 0; q < n; ++q)
        (a.is_final(q) ? finals_block : others_block).push_back(q);
    for (auto* seed : {&finals_block, &others_block}) {
        if (seed->empty()) continue;
        for (int q : *seed) block_of[q] = static_cast<int>(blocks.size());
        blocks.push_back(std::move(*seed));
    }

    std::deque<int> worklist;
    std::vector<char> queued(blocks.size(), 1);
    for (size_t i = 0; i < blocks.size(); ++i) worklist.push_back(static_cast<int>(i));

    while (!worklist.empty()) {
        int splitter_id = worklist.front();
        worklist.pop_front();
        queued[splitter_id] = 0;
        std::vector<int> splitter = blocks[splitter_id];  // snapshot
        for (int c = 0; c < sigma; ++c) {
            // States leading into the splitter on c, grouped by current block.
            std::map<int, std::vector<int>> touched;
            for (int q : splitter)
                for (int p : inv[c][q]) touched[block_of[p]].push_back(p);
            for (auto& [id, hit] : touched) {
                if (hit.size() == blocks[id].size()) continue;
                int new_id = static_cast<int>(blocks.size());
                for (int p : hit) block_of[p] = new_id;
                blocks[id].erase(
                    std::remove_if(blocks[id].begin(), blocks[id].end(),
                                   [&](int p) { return block_of[p] == new_id; }),
                    blocks[id].end());
                size_t remaining = blocks[id].size();
                size_t moved = hit.size();
                blocks.push_back(std::move(hit));
                queued.push_back(0);
                // If the split block is still queued both halves stay queued;
                // otherwise queue the smaller half.
                if (queued[id] || moved < remaining) {
                    worklist.push_back(new_id);
                    queued[new_id] = 1;
                } else {
                    worklist.push_back(id);
                    queued[id] = 1;
                }
            }
        }
    }

    // Renumber blocks by smallest member for reproducible output.
    std::vector<int> min_state(blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i)
        min_state[i] = *std::min_element(blocks[i].begin(), blocks[i].end());
    std::vector<int> by_min(blocks.size());
    std::iota(by_min.begin(), by_min.end(), 0);
    std::sort(by_min.begin(), by_min.end(),
              [&](int x, int y) { return min_state[x] < min_state[y]; });
    std::vector<int> rank(blocks.size());
    for (size_t i = 0; i < by_min.size(); ++i) rank[by_min[i]] = static_cast<int>(i);
    std::vector<int> out(n);
    for (int q = 0; q < n; ++q) out[q] = rank[block_of[q]];
    return out;
}

Dfa minimize(const Dfa& a) {
    Dfa c = canonicalize(complete(a));  // accessible and complete
    std::vector<int> block = nerode_partition(c);
    int block_count = *std::max_element(block.begin(), block.end()) + 1;
    Dfa quotient = make_dfa(block_count, c.alphabet_size, block[c.initial]);
    for (int q = 0; q < c.state_count(); ++q) {
        if (c.is_final(q)) quotient.finals[block[q]] = true;
        for (int letter = 0; letter < c.alphabet_size; ++letter) {
            int target = block[c.next(q, letter)];
            int previous = quotient.next(block[q], letter);
            if (previous != no_transition && previous != target)
                throw std::logic_error("minimize: refinement left an unstable block");
            quotient.set_next(block[q], letter, target);
        }
    }
    return canonicalize(quotient);
}

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("equivalent: alphabet mismatch");
    Dfa ca = complete(a);
    Dfa cb = complete(b);
    const int na = ca.state_count();
    // Union-find over the disjoint union of both state sets.
    std::vector<int> parent(na + cb.state_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto is_final = [&](int x) {
        return x < na ? ca.is_final(x) : cb.is_final(x - na);
    };
    std::deque<std::pair<int, int>> pending{{ca.initial, na + cb.initial}};
    while (!pending.empty()) {
        auto [x, y] = pending.front();
        pending.pop_front();
        int rx = find(x);
        int ry = find(y);
        if (rx == ry) continue;
        if (is_final(x) != is_final(y)) return false;
        parent[ry] = rx;
        for (int c = 0; c < ca.alphabet_size; ++c) {
            int tx = x < na ? ca.next(x, c) : na + cb.next(x - na, c);
            int ty = y < na ? ca.next(y, c) : na + cb.next(y - na, c);
            pending.emplace_back(tx, ty);
        }
    }
    return true;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    Dfa ca = canonicalize(a);
    Dfa cb = canonicalize(b);
    return ca.alphabet_size == cb.alphabet_size &&
           ca.finals == cb.finals && ca.delta == cb.delta;
}

bool disjoint_states(const Dfa& a) {
    const int n = a.state_count();
    const int sigma = a.alphabet_size;
    std::vector<std::vector<std::vector<int>>> inv(
        sigma, std::vector<std::vector<int>>(n));
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < sigma; ++c) {
            int t = a.next(q, c);
            if (t != no_transition) inv[c][t].push_back(q);
        }
    // Backward closure on the pair graph from all (final, final) pairs: a
    // pair is "joint" when some common word is accepted from both states.
    std::vector<bool> joint(static_cast<size_t>(n) * n, false);
    std::deque<std::pair<int, int>> queue;
    auto mark = [&](int p, int q) {
        size_t idx = static_cast<size_t>(p) * n + q;
        if (!joint[idx]) {
            joint[idx] = true;
            queue.emplace_back(p, q);
        }
    };
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (a.is_final(p) && a.is_final(q)) mark(p, q);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int c = 0; c < sigma; ++c)
            for (int p : inv[c][x])
                for (int q : inv[c][y]) mark(p, q);
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q && joint[static_cast<size_t>(p) * n + q]) return false;
    return true;
}

}  // namespace tmset
