#pragma once

#include "wp/graph.hpp"
#include "wp/polynomial.hpp"

namespace wp {

// Vertices of g1 keep their indices; vertices of g2 follow.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);

// Per-vertex clique sizes for the mixed corona: vertex v of the base gets a
// private clique of clique_sizes[v] >= 1 vertices, completely joined to v.
struct CoronaSpec {
    Graph base;
    std::vector<int> clique_sizes;
};

// Index layout: base vertices 0..n-1 first, then the clique blocks in base
// vertex order.
Graph corona(const CoronaSpec& spec);

// Uniform clique corona G o K_p.
Graph clique_corona(const Graph& g, int p);

// Vertex (a, b) of g[h] is index a*n(h)+b; (a1,b1) ~ (a2,b2) iff a1a2 is an
// edge of g, or a1 == a2 and b1b2 is an edge of h.
Graph lexicographic(const Graph& g, const Graph& h);

// I(G o K_p) computed without building the corona:
// sum_k s_k x^k (1+px)^{n-k} for I(G) = sum_k s_k x^k of the n-vertex base.
Polynomial corona_polynomial(const Graph& g, int p);

// Independence polynomial of the join of four disjoint 10-cliques with the
// complete multipartite graph on `parts` parts of four vertices each:
// (1+10x)^4 + parts*((1+x)^4 - 1). Instances of this family feed the
// non-log-concave lexicographic products checked by the verify module.
Polynomial counterexample_h_polynomial(long parts);

}  // namespace wp
