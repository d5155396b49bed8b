#pragma once

#include <functional>
#include <vector>

#include "wp/budget.hpp"
#include "wp/graph.hpp"
#include "wp/polynomial.hpp"
#include "wp/rational.hpp"

namespace wp {

// Exact independence polynomial. Branching recursion I(G) = I(G-v) + x I(G_v)
// on a maximum-degree pivot, with connected components factored apart and
// results memoized per induced vertex subset.
Polynomial independence_polynomial(const Graph& g, const Budget* budget = nullptr);

// alpha(G); 0 for the empty graph
int independence_number(const Graph& g, const Budget* budget = nullptr);

// Visits every maximal independent set exactly once (pivoting enumeration);
// return false from the visitor to stop early.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit,
                                      const Budget* budget = nullptr);

std::vector<VertexSet> maximal_independent_sets(const Graph& g);

bool is_well_covered(const Graph& g, const Budget* budget = nullptr);  // n >= 1

// well-covered and G-v well-covered for every v; requires n >= 2
bool is_one_well_covered(const Graph& g, const Budget* budget = nullptr);

// Recursive W_p membership: p == 1 is well-coveredness, and for p >= 2 the
// vertex-deletion characterization (G-v in W_{p-1} and alpha(G-v) = alpha(G)
// for every v) evaluated with memoization over induced vertex subsets.
bool is_wp(const Graph& g, int p, const Budget* budget = nullptr);

// Brute-force oracle straight from the definition: every tuple of p pairwise
// disjoint independent sets (empty sets allowed) must extend to p pairwise
// disjoint maximum independent sets. Desk scale only: n <= 8, p <= 3.
bool is_wp_definitional(const Graph& g, int p);

// Largest p with G in W_p (0 when not even well-covered). The scan is capped
// by min over components H of floor(n(H)/alpha(H)).
int max_wp(const Graph& g, const Budget* budget = nullptr);

// lambda* = min over nonempty independent S of |N(S)|/|S|; 0 as soon as the
// graph has an isolated vertex. Requires n >= 1.
Rational qr_threshold(const Graph& g, const Budget* budget = nullptr);

// Equivalent to lambda <= qr_threshold(g), but implemented independently as
// a direct scan over independent sets with early exit.
bool is_quasi_regularizable(const Graph& g, const Rational& lambda,
                            const Budget* budget = nullptr);

struct ClassReport {
    int alpha = 0;
    Polynomial poly;
    bool well_covered = false;
    bool one_well_covered = false;
    int max_wp = 0;
    Rational qr_threshold;
    bool log_concave = false;
    bool unimodal = false;
};

ClassReport classify(const Graph& g, const Budget* budget = nullptr);  // n >= 1

// One JSON object per graph, polynomial in text form, rationals as "num/den".
std::string class_report_json(const ClassReport& report, const std::string& graph6);

}  // namespace wp
