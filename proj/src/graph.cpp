#include "wp/graph.hpp"

namespace wp {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star requires leaves >= 0");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw std::invalid_argument("complete_multipartite requires at least one part");
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite part sizes must be >= 1");
        n += s;
    }
    Graph g(n);
    std::vector<int> part_of(n);
    int idx = 0;
    for (size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[idx++] = int(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph figure1_graph() {
    Graph g(6);
    static const char* names[] = {"x1", "x2", "x3", "x4", "y1", "y2"};
    for (int v = 0; v < 6; ++v) g.set_label(v, names[v]);
    const int x1 = 0, x2 = 1, x3 = 2, x4 = 3, y1 = 4, y2 = 5;
    g.add_edge(x1, x2);
    g.add_edge(x1, x3);
    g.add_edge(x2, x4);
    g.add_edge(x3, x4);
    g.add_edge(x3, y1);
    g.add_edge(x4, y2);
    g.add_edge(x4, y1);
    g.add_edge(x3, y2);
    g.add_edge(y1, y2);
    return g;
}

Graph figure2_graph(int q) {
    if (q < 5) throw std::invalid_argument("figure2_graph requires q >= 5");
    Graph g(q + 4);
    const int x1 = 0, x2 = 1, x3 = 2, x4 = 3, y1 = 4, y2 = 5;
    g.set_label(x1, "x1");
    g.set_label(x2, "x2");
    g.set_label(x3, "x3");
    g.set_label(x4, "x4");
    g.set_label(y1, "y1");
    g.set_label(y2, "y2");
    for (int i = 6; i < q + 4; ++i) g.set_label(i, "k" + std::to_string(i - 3));
    g.add_edge(x1, x2);
    g.add_edge(x1, x3);
    g.add_edge(x2, x4);
    g.add_edge(x3, x4);
    g.add_edge(x3, y1);
    g.add_edge(x4, y2);
    // clique on {y1, y2, 6..q+3}
    for (int u = 4; u < q + 4; ++u)
        for (int v = u + 1; v < q + 4; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace wp
