#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wp/budget.hpp"
#include "wp/graph.hpp"

namespace wp {

struct Violation {
    std::string graph6;
    std::string detail;
};

struct VerifyReport {
    std::string statement;
    std::vector<std::pair<std::string, std::string>> params;
    long scanned = 0;
    long hypothesis_count = 0;
    std::vector<Violation> violations;
    std::vector<std::string> budget_exceeded;
    double elapsed_ms = 0;

    // with_elapsed=false gives the canonical form: a pure function of the
    // input stream and parameters, byte-identical at any worker count.
    std::string json(bool with_elapsed = true) const;
};

struct RunOptions {
    int workers = 1;
    std::chrono::milliseconds per_graph_budget{5000};
    std::string detail_jsonl_path;  // when set, per-graph outcomes land here
};

// Per-graph outcome of a statement evaluation. hypothesis_hits counts the
// (graph, parameter) instances that satisfied the statement's hypothesis;
// each violation detail describes one instance where the conclusion failed.
struct GraphOutcome {
    int hypothesis_hits = 0;
    std::vector<std::string> violations;
};

using GraphEval = std::function<GraphOutcome(const Graph&, const Budget*)>;

// Shared harness runner: distributes the stream over a worker pool, merges
// outcomes in input order, and re-verifies every reported violation in
// isolation (single evaluation, fresh state) before emitting the report.
VerifyReport run_over_stream(const std::string& statement,
                             const std::vector<std::string>& stream, const GraphEval& eval,
                             const RunOptions& options,
                             std::vector<std::pair<std::string, std::string>> params);

// W_p order-bound biconditional: a connected W_p graph is p-quasi-
// regularizable iff n >= (p+1) alpha. p = 2 is outside the theorem and is
// rejected unless allow_p2 is set.
VerifyReport verify_quasireg_order_bound(const std::vector<std::string>& stream,
                                         const std::vector<int>& p_set, bool allow_p2,
                                         const RunOptions& options);

// W_p membership passes to connected components and back, and a W_p graph
// has at least p vertices per component.
VerifyReport verify_component_closure(const std::vector<std::string>& stream,
                                      const RunOptions& options);

// For isolate-free graphs: 1-well-covered iff W_2.
VerifyReport verify_one_wc_is_w2(const std::vector<std::string>& stream,
                                 const RunOptions& options);

// If every component of a W_p graph sits in interval case A or B, the
// independence polynomial is log-concave.
VerifyReport verify_interval_log_concavity(const std::vector<std::string>& stream,
                                           const std::vector<int>& p_set, bool allow_p2,
                                           const RunOptions& options);

// Coefficient inequalities: the top-coefficient bound for every graph, the
// quasi-regularizability upper bounds at lambda = qr_threshold, and the W_p
// growth lower bounds for connected W_p graphs with p <= 3.
VerifyReport verify_coefficient_bounds(const std::vector<std::string>& stream,
                                       const RunOptions& options);

// Very well-covered graphs (well-covered, isolate-free, n = 2 alpha) with
// alpha <= 5 have log-concave independence polynomials.
VerifyReport verify_very_well_covered_log_concave(const std::vector<std::string>& stream,
                                                  const RunOptions& options);

// Open conjecture hunt over connected W_2 graphs: 2-quasi-regularizable iff
// n >= 3 alpha. Violations are findings, not errors.
VerifyReport hunt_two_quasireg_conjecture(const std::vector<std::string>& stream,
                                          const RunOptions& options);

// The lexicographic family K_m[H] with I(H) = counterexample_h_polynomial:
// asserts the product polynomial is NOT log-concave and records the first
// violating index. The family's published range is m >= 2, 24 <= n <= 2452;
// parameters outside it are flagged but still evaluated.
VerifyReport verify_lex_family_not_log_concave(long m, long parts);

}  // namespace wp
