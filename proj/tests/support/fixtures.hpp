#pragma once

// Small hand-written instances shared by the tests.

#include <random>

#include "icx/model.hpp"

namespace icx::fixtures {

inline Instance make(int M, std::vector<std::pair<MessageSet, MessageSet>> dests) {
    Instance inst;
    inst.num_messages = M;
    int id = 1;
    for (auto& [w, a] : dests) inst.destinations.push_back({id++, std::move(w), std::move(a)});
    return inst;
}

inline Instance aligned_pairs() { return make(4, {{{1, 2}, {}}, {{1, 3}, {4}}, {{2, 4}, {3}}}); }
inline Instance shared_groupcast() { return make(2, {{{1}, {}}, {{1, 2}, {}}, {{2}, {1}}}); }
inline Instance nested_pairs() { return make(4, {{{1, 2}, {}}, {{3, 4}, {1, 2}}}); }
inline Instance conflicting_pairs() { return make(4, {{{1, 3}, {2, 4}}, {{2, 3}, {}}, {{3, 4}, {2}}}); }
inline Instance chained_pairs() {
    return make(5, {{{1, 5}, {2}}, {{1, 2}, {3}}, {{2, 5}, {1, 4}}, {{2, 4}, {1, 3, 5}}, {{2, 3}, {1, 4, 5}}});
}
/// Pentagon with each destination holding both circular neighbours.
inline Instance pentagon() {
    return make(5, {{{1}, {5, 2}}, {{2}, {1, 3}}, {{3}, {2, 4}}, {{4}, {3, 5}}, {{5}, {4, 1}}});
}
/// Pentagon with destination 2 holding 4 instead of 3.
inline Instance pentagon_relabelled() {
    return make(5, {{{1}, {5, 2}}, {{2}, {1, 4}}, {{3}, {2, 4}}, {{4}, {3, 5}}, {{5}, {4, 1}}});
}
inline Instance example1_instance() { return make(3, {{{1}, {}}, {{2}, {3}}, {{3}, {2}}}); }

/// Random valid instance: every destination wants between L and L+extra
/// messages and holds a random subset of the rest.
inline Instance random_instance(std::mt19937_64& rng, int max_m, int max_k, int L, int extra = 0) {
    std::uniform_int_distribution<int> pick_m(L, max_m);
    std::uniform_int_distribution<int> pick_k(1, max_k);
    std::bernoulli_distribution coin(0.5);
    Instance inst;
    inst.num_messages = pick_m(rng);
    const int K = pick_k(rng);
    for (int k = 1; k <= K; ++k) {
        std::vector<int> order(static_cast<std::size_t>(inst.num_messages));
        for (int m = 1; m <= inst.num_messages; ++m) order[static_cast<std::size_t>(m - 1)] = m;
        std::shuffle(order.begin(), order.end(), rng);
        const int want_count = std::min(inst.num_messages, L + std::uniform_int_distribution<int>(0, extra)(rng));
        Destination d;
        d.id = k;
        for (int t = 0; t < want_count; ++t) d.wants.insert(order[static_cast<std::size_t>(t)]);
        for (std::size_t t = static_cast<std::size_t>(want_count); t < order.size(); ++t)
            if (coin(rng)) d.has.insert(order[t]);
        inst.destinations.push_back(std::move(d));
    }
    return inst;
}

}  // namespace icx::fixtures
