#include "tmset/decision.hpp"

#include <stdexcept>

#include "tmset/automaton_ops.hpp"
#include "tmset/constructions.hpp"

namespace tmset {

std::vector<std::pair<long long, int>> candidates_for_complexity(int complexity,
                                                                 int p) {
    if (complexity < 1)
        throw std::domain_error("candidates_for_complexity: complexity < 1");
    if (p < 1) throw std::domain_error("candidates_for_complexity: p < 1");
    std::vector<std::pair<long long, int>> out;
    for (long long k = 1; 2 * k <= complexity; k += 2) {
        int tail = complexity - static_cast<int>(2 * k);
        if (tail == 0) {
            out.emplace_back(k, 0);
        } else {
            // ceil(z/p) == tail exactly for z in ((tail-1)*p, tail*p].
            for (int z = (tail - 1) * p + 1; z <= tail * p; ++z)
                out.emplace_back(k, z);
        }
    }
    return out;
}

Dfa zero_star_dfa(int alphabet_size) {
    Dfa a = make_dfa(2, alphabet_size, 0);
    a.finals[0] = true;
    for (int c = 0; c < alphabet_size; ++c) {
        a.set_next(0, c, c == 0 ? 0 : 1);
        a.set_next(1, c, 1);
    }
    return a;
}

DecisionOutcome decide_thue_multiple(const Dfa& a, int p) {
    if (p < 1) throw std::domain_error("decide_thue_multiple: p < 1");
    if (p > 20 || a.alphabet_size != (1 << p))
        throw std::invalid_argument(
            "decide_thue_multiple: alphabet size is not 2^p");
    DecisionOutcome out;
    Dfa minimal = minimize(a);
    out.minimized_state_count = minimal.state_count();

    // 0 * T = {0}: its padded-expansion language is 0*. Handled up front
    // because no positive multiple produces it.
    if (equivalent(minimal, zero_star_dfa(a.alphabet_size))) {
        out.multiple = Int(0);
        return out;
    }

    for (auto [k, z] : candidates_for_complexity(out.minimized_state_count, p)) {
        out.candidates_tested.emplace_back(k, z);
        Int m = Int(k) << static_cast<unsigned>(z);
        if (equivalent(minimal, build_minimal_thue_multiple_dfa(m, p))) {
            out.multiple = m;
            return out;
        }
    }
    return out;
}

}  // namespace tmset
