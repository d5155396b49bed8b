#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wp/bitset.hpp"

namespace wp {

// Finite undirected graph without loops or multi-edges. Vertices are dense
// 0-based indices; adjacency is kept as one bit row per vertex. Immutable in
// spirit: callers build a graph once (add_edge) and then treat it as a value.
class Graph {
public:
    static constexpr int kMaxVertices = 512;

    Graph() = default;

    explicit Graph(int n) : n_(n), rows_(n, VertexSet(n)) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    }

    int n() const { return n_; }

    long m() const {
        long deg_sum = 0;
        for (const auto& r : rows_) deg_sum += r.count();
        return deg_sum / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && rows_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        if (n_ == 0) throw std::invalid_argument("min_degree of the empty graph");
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (rows_[v].empty()) return true;
        return false;
    }

    bool is_complete() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != n_ - 1) return false;
        return true;
    }

    // N(S): vertices outside s with a neighbor in s
    VertexSet neighborhood(const VertexSet& s) const {
        check_set(s);
        VertexSet out(n_);
        s.for_each([&](int v) { out |= rows_[v]; });
        out -= s;
        return out;
    }

    // N[S] = S union N(S)
    VertexSet closed_neighborhood(const VertexSet& s) const { return neighborhood(s) | s; }

    struct InducedSubgraph;

    InducedSubgraph induced(const VertexSet& keep) const;

    // Vertex i of the result is vertex i (i < v) or i+1 (i >= v) of *this.
    Graph delete_vertex(int v) const;

    // G_S = G - N[S]
    InducedSubgraph localization(const VertexSet& s) const;

    std::vector<VertexSet> components() const {
        std::vector<VertexSet> comps;
        VertexSet seen(n_);
        for (int v = 0; v < n_; ++v) {
            if (seen.test(v)) continue;
            VertexSet comp(n_);
            comp.set(v);
            VertexSet frontier = comp;
            while (!frontier.empty()) {
                VertexSet next(n_);
                frontier.for_each([&](int u) { next |= rows_[u]; });
                next -= comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push_back(comp);
        }
        return comps;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    bool has_labels() const { return !labels_.empty(); }

    const std::string& label(int v) const {
        check_vertex(v);
        static const std::string kEmpty;
        return labels_.empty() ? kEmpty : labels_[v];
    }

    void set_label(int v, std::string text) {
        check_vertex(v);
        if (labels_.empty()) labels_.resize(n_);
        labels_[v] = std::move(text);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }
    void check_set(const VertexSet& s) const {
        if (s.universe() != n_) throw std::invalid_argument("vertex set universe mismatch");
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

// standard families
Graph complete(int n);
Graph cycle(int n);           // n >= 3
Graph path(int n);            // n >= 1
Graph star(int leaves);       // K_{1,leaves}, center is vertex 0
Graph complete_multipartite(const std::vector<int>& part_sizes);

// Fixed 6-vertex fixture: square x1,x2,x4,x3 with a pendant square on the
// right; vertices 0..5 are x1,x2,x3,x4,y1,y2; edges x1x2, x1x3, x2x4, x3x4,
// x3y1, x4y2, x4y1, x3y2, y1y2.
Graph figure1_graph();

// Clique-tail fixture G_q (q >= 5): 4-cycle x1-x2-x4-x3-x1 on vertices 0..3,
// a q-clique on vertices 4..q+3 whose first two members are y1 = 4 and
// y2 = 5, plus the edges x3y1 and x4y2.
Graph figure2_graph(int q);

}  // namespace wp
