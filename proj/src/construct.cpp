#include "wp/construct.hpp"

#include <stdexcept>

#include "wp/indset.hpp"

namespace wp {

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.n() + g2.n());
    for (int u = 0; u < g1.n(); ++u)
        g1.neighbors(u).for_each([&](int v) {
            if (u < v) g.add_edge(u, v);
        });
    const int off = g1.n();
    for (int u = 0; u < g2.n(); ++u)
        g2.neighbors(u).for_each([&](int v) {
            if (u < v) g.add_edge(off + u, off + v);
        });
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.n(); ++u)
        for (int v = 0; v < g2.n(); ++v) g.add_edge(u, g1.n() + v);
    return g;
}

Graph corona(const CoronaSpec& spec) {
    const int n = spec.base.n();
    if (int(spec.clique_sizes.size()) != n)
        throw std::invalid_argument("corona: clique_sizes must have one entry per base vertex");
    long total = n;
    for (int s : spec.clique_sizes) {
        if (s < 1) throw std::invalid_argument("corona: clique sizes must be >= 1");
        total += s;
    }
    Graph g(int(total));
    for (int u = 0; u < n; ++u)
        spec.base.neighbors(u).for_each([&](int v) {
            if (u < v) g.add_edge(u, v);
        });
    int next = n;
    for (int v = 0; v < n; ++v) {
        const int start = next;
        next += spec.clique_sizes[v];
        for (int a = start; a < next; ++a) {
            g.add_edge(v, a);
            for (int b = a + 1; b < next; ++b) g.add_edge(a, b);
        }
    }
    return g;
}

Graph clique_corona(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("clique_corona requires p >= 1");
    return corona(CoronaSpec{g, std::vector<int>(size_t(g.n()), p)});
}

Graph lexicographic(const Graph& g, const Graph& h) {
    long n = long(g.n()) * h.n();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("lexicographic product exceeds the vertex cap");
    Graph out(int(n));
    const int nh = h.n();
    for (int a1 = 0; a1 < g.n(); ++a1)
        for (int b1 = 0; b1 < nh; ++b1)
            for (int a2 = a1; a2 < g.n(); ++a2)
                for (int b2 = (a2 == a1 ? b1 + 1 : 0); b2 < nh; ++b2) {
                    bool adjacent = a1 == a2 ? h.has_edge(b1, b2) : g.has_edge(a1, a2);
                    if (adjacent) out.add_edge(a1 * nh + b1, a2 * nh + b2);
                }
    return out;
}

Polynomial corona_polynomial(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("corona_polynomial requires p >= 1");
    const int n = g.n();
    const Polynomial base = independence_polynomial(g);
    const Polynomial block({1, p});  // 1 + px
    Polynomial out;
    for (int k = 0; k <= base.degree(); ++k) {
        Polynomial term = block.pow(unsigned(n - k)) * base.coef(k);
        out += term.shifted(k);
    }
    return out;
}

Polynomial counterexample_h_polynomial(long parts) {
    if (parts < 1) throw std::invalid_argument("counterexample_h_polynomial requires parts >= 1");
    const Polynomial cliques = Polynomial({1, 10}).pow(4);
    Polynomial part_tail = Polynomial({1, 1}).pow(4);  // (1+x)^4, constant dropped below
    std::vector<mpz_class> tail(part_tail.coeffs());
    tail[0] = 0;
    return cliques + Polynomial(std::move(tail)) * mpz_class(parts);
}

}  // namespace wp
