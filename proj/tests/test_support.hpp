#pragma once

// Shared brute-force oracles and deterministic random graphs for the tests.
// The oracles deliberately avoid the library's recursion/enumeration paths:
// everything here is a plain 2^n subset filter.

#include <cstdint>
#include <random>
#include <vector>

#include "wp/graph.hpp"

namespace wptest {

inline std::vector<uint32_t> adjacency_masks(const wp::Graph& g) {
    std::vector<uint32_t> adj(size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        g.neighbors(v).for_each([&](int u) { adj[size_t(v)] |= uint32_t{1} << u; });
    return adj;
}

inline bool subset_independent(const std::vector<uint32_t>& adj, uint32_t mask) {
    for (uint32_t rest = mask; rest; rest &= rest - 1)
        if (adj[size_t(std::countr_zero(rest))] & mask) return false;
    return true;
}

// s_k for k = 0..alpha via the 2^n filter; n <= 20
inline std::vector<long> naive_independence_counts(const wp::Graph& g) {
    const int n = g.n();
    auto adj = adjacency_masks(g);
    std::vector<long> counts(size_t(n) + 1, 0);
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask)
        if (subset_independent(adj, mask)) ++counts[size_t(std::popcount(mask))];
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

inline std::vector<uint32_t> naive_maximal_independent_sets(const wp::Graph& g) {
    const int n = g.n();
    auto adj = adjacency_masks(g);
    std::vector<uint32_t> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        if (!subset_independent(adj, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask & (uint32_t{1} << v)) && !(adj[size_t(v)] & mask)) maximal = false;
        if (maximal) out.push_back(mask);
    }
    return out;
}

inline wp::Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
    wp::Graph g(n);
    std::bernoulli_distribution edge(edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

inline wp::Graph relabel(const wp::Graph& g, const std::vector<int>& perm) {
    wp::Graph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out.add_edge(perm[size_t(u)], perm[size_t(v)]);
        });
    return out;
}

inline wp::Graph random_relabel(std::mt19937_64& rng, const wp::Graph& g) {
    std::vector<int> perm(size_t(g.n()));
    for (int i = 0; i < g.n(); ++i) perm[size_t(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

}  // namespace wptest
