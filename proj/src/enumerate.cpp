#include "wp/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "wp/graph6.hpp"

namespace wp::gen {

namespace {

constexpr int kMaxN = 11;  // C(12,2) would not fit the 64-bit key

using Rows = std::array<uint16_t, kMaxN>;

struct State {
    std::array<uint8_t, kMaxN> order{};
    uint16_t used = 0;
};

// signature of a partial ordering: the used set plus, for every unused
// vertex, its adjacency bits to the placed prefix (in placement order).
// Partial orderings with equal signatures have identical continuations.
unsigned __int128 signature(const Rows& adj, int n, const State& st, int placed) {
    unsigned __int128 sig = st.used;
    for (int u = 0; u < n; ++u) {
        if (st.used & (uint16_t{1} << u)) continue;
        uint16_t bits = 0;
        for (int i = 0; i < placed; ++i)
            bits = uint16_t((bits << 1) | ((adj[st.order[i]] >> u) & 1));
        sig = (sig << 11) | bits;
    }
    return sig;
}

uint64_t canonical_key_raw(const Rows& adj, int n) {
    if (n <= 1) return 0;
    std::vector<State> frontier(1);
    std::vector<std::pair<unsigned __int128, State>> candidates;
    uint64_t key = 0;
    for (int pos = 0; pos < n; ++pos) {
        int best_col = -1;
        candidates.clear();
        for (const State& st : frontier) {
            for (int v = 0; v < n; ++v) {
                if (st.used & (uint16_t{1} << v)) continue;
                int col = 0;
                for (int i = 0; i < pos; ++i)
                    col = (col << 1) | ((adj[st.order[i]] >> v) & 1);
                if (col < best_col) continue;
                if (col > best_col) {
                    best_col = col;
                    candidates.clear();
                }
                State ns = st;
                ns.order[pos] = uint8_t(v);
                ns.used |= uint16_t{1} << v;
                candidates.emplace_back(signature(adj, n, ns, pos + 1), ns);
            }
        }
        key = (key << pos) | uint64_t(best_col);
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        frontier.clear();
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (i == 0 || candidates[i].first != candidates[i - 1].first)
                frontier.push_back(candidates[i].second);
        }
    }
    return key;
}

Rows rows_of(const Graph& g) {
    Rows adj{};
    for (int v = 0; v < g.n(); ++v)
        g.neighbors(v).for_each([&](int u) { adj[v] |= uint16_t{1} << u; });
    return adj;
}

}  // namespace

uint64_t canonical_key(const Graph& g) {
    if (g.n() > kMaxN)
        throw std::invalid_argument("canonical_key supports n <= " + std::to_string(kMaxN));
    Rows adj = rows_of(g);
    return canonical_key_raw(adj, g.n());
}

Graph from_key(int n, uint64_t key) {
    Graph g(n);
    // decode in packing order: columns j = 1..n-1, bit for i = 0 first
    int shift = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --shift;
            if ((key >> shift) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<uint64_t> all_keys(int n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("all_keys supports 1 <= n <= 11");
    if (n == 1) return {0};
    std::vector<uint64_t> prev = all_keys(n - 1);
    std::unordered_set<uint64_t> dedup;
    dedup.reserve(prev.size() * 8);
    Rows adj{};
    for (uint64_t pk : prev) {
        // rebuild the n-1 vertex adjacency rows from the key
        adj.fill(0);
        int shift = (n - 1) * (n - 2) / 2;
        for (int j = 1; j < n - 1; ++j)
            for (int i = 0; i < j; ++i) {
                --shift;
                if ((pk >> shift) & 1) {
                    adj[i] |= uint16_t{1} << j;
                    adj[j] |= uint16_t{1} << i;
                }
            }
        for (uint32_t nbrs = 0; nbrs < (uint32_t{1} << (n - 1)); ++nbrs) {
            Rows ext = adj;
            ext[n - 1] = uint16_t(nbrs);
            for (int v = 0; v < n - 1; ++v)
                if ((nbrs >> v) & 1) ext[v] |= uint16_t{1} << (n - 1);
            dedup.insert(canonical_key_raw(ext, n));
        }
    }
    std::vector<uint64_t> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    for (uint64_t key : all_keys(n)) out.push_back(from_key(n, key));
    return out;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

std::vector<std::string> graph6_stream(int min_n, int max_n, bool connected_only) {
    if (min_n < 1 || max_n > kMaxN || min_n > max_n)
        throw std::invalid_argument("graph6_stream range must satisfy 1 <= min_n <= max_n <= 11");
    std::vector<std::string> out;
    for (int n = min_n; n <= max_n; ++n) {
        auto graphs = connected_only ? all_connected_graphs(n) : all_graphs(n);
        for (const Graph& g : graphs) out.push_back(to_graph6(g));
    }
    return out;
}

}  // namespace wp::gen
