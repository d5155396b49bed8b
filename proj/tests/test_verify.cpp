#include "doctest.h"

#include "wp/construct.hpp"
#include "wp/enumerate.hpp"
#include "wp/graph6.hpp"
#include "wp/indset.hpp"
#include "wp/verify.hpp"

using namespace wp;

namespace {

RunOptions opts(int workers = 1) {
    RunOptions o;
    o.workers = workers;
    return o;
}

}  // namespace

TEST_CASE("order-bound biconditional holds on small connected streams") {
    auto stream = gen::graph6_stream(1, 6, true);
    auto report = verify_quasireg_order_bound(stream, {1, 3}, false, opts());
    CHECK(report.scanned == long(stream.size()));
    CHECK(report.violations.empty());
    CHECK(report.hypothesis_count > 0);
    CHECK(report.budget_exceeded.empty());
}

TEST_CASE("p=2 is rejected without the override") {
    auto stream = gen::graph6_stream(3, 3, true);
    CHECK_THROWS_AS(verify_quasireg_order_bound(stream, {2}, false, opts()),
                    std::invalid_argument);
    // with the override, C_5 is W_2 with n < 3 alpha and not 2-QR: two
    // failing sides, so the biconditional itself is not contradicted
    auto report = verify_quasireg_order_bound({to_graph6(cycle(5))}, {2}, true, opts());
    CHECK(report.hypothesis_count == 1);
    CHECK(report.violations.empty());
}

TEST_CASE("component closure on all graphs n <= 5") {
    auto stream = gen::graph6_stream(1, 5, false);
    auto report = verify_component_closure(stream, opts());
    CHECK(report.violations.empty());
}

TEST_CASE("1-well-covered equals W_2 on isolate-free graphs n <= 6") {
    auto stream = gen::graph6_stream(2, 6, false);
    auto report = verify_one_wc_is_w2(stream, opts());
    CHECK(report.violations.empty());
    CHECK(report.hypothesis_count > 0);
}

TEST_CASE("interval log-concavity harness gates hypotheses correctly") {
    // the q=5 clique-tail fixture lies outside both interval cases for every
    // p, yet its polynomial is log-concave: hypothesis-not-satisfied must
    // never count as a violation
    std::vector<std::string> stream{to_graph6(figure2_graph(5)), to_graph6(complete(4)),
                                    to_graph6(cycle(5))};
    auto report = verify_interval_log_concavity(stream, {1, 3, 4}, false, opts());
    CHECK(report.violations.empty());
    auto small = gen::graph6_stream(1, 6, false);
    auto r2 = verify_interval_log_concavity(small, {1, 3, 4}, false, opts());
    CHECK(r2.violations.empty());
}

TEST_CASE("coefficient bounds on all graphs n <= 6") {
    auto stream = gen::graph6_stream(1, 6, false);
    auto report = verify_coefficient_bounds(stream, opts());
    CHECK(report.violations.empty());
}

TEST_CASE("very well-covered log-concavity on all graphs n <= 8") {
    auto stream = gen::graph6_stream(2, 8, false);
    auto report = verify_very_well_covered_log_concave(stream, opts());
    CHECK(report.violations.empty());
    CHECK(report.hypothesis_count > 0);
}

TEST_CASE("conjecture hunt on small connected graphs") {
    auto stream = gen::graph6_stream(1, 7, true);
    auto report = hunt_two_quasireg_conjecture(stream, opts());
    CHECK(report.violations.empty());
    CHECK(report.hypothesis_count > 0);
}

TEST_CASE("reports are deterministic across worker counts") {
    auto stream = gen::graph6_stream(1, 6, false);
    auto one = verify_one_wc_is_w2(stream, opts(1));
    auto four = verify_one_wc_is_w2(stream, opts(4));
    CHECK(one.json(false) == four.json(false));

    auto h1 = verify_coefficient_bounds(stream, opts(1));
    auto h4 = verify_coefficient_bounds(stream, opts(4));
    CHECK(h1.json(false) == h4.json(false));
}

TEST_CASE("generic runner surfaces violations and re-verifies them") {
    // a deliberately false statement: "every graph has an even vertex count"
    GraphEval eval = [](const Graph& g, const Budget*) {
        GraphOutcome out;
        out.hypothesis_hits = 1;
        if (g.n() % 2 != 0) out.violations.push_back("odd order " + std::to_string(g.n()));
        return out;
    };
    std::vector<std::string> stream{to_graph6(path(2)), to_graph6(path(3)),
                                    to_graph6(path(4)), to_graph6(path(5))};
    auto report = run_over_stream("even-order", stream, eval, opts(3), {});
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].graph6 == to_graph6(path(3)));
    CHECK(report.violations[1].graph6 == to_graph6(path(5)));
    CHECK(report.hypothesis_count == 4);

    // violations keep stream order at any worker count
    auto again = run_over_stream("even-order", stream, eval, opts(1), {});
    CHECK(report.json(false) == again.json(false));
}

TEST_CASE("budget-exceeded graphs are listed separately") {
    GraphEval eval = [](const Graph& g, const Budget* budget) {
        // burn budget ticks without doing real work
        if (budget)
            for (long i = 0; i < (1 << 22); ++i) budget->check();
        GraphOutcome out;
        out.hypothesis_hits = g.n();
        return out;
    };
    RunOptions o;
    o.workers = 2;
    o.per_graph_budget = std::chrono::milliseconds(0);
    std::vector<std::string> stream{to_graph6(path(2)), to_graph6(path(3))};
    auto report = run_over_stream("slow", stream, eval, o, {});
    CHECK(report.budget_exceeded.size() == 2);
    CHECK(report.hypothesis_count == 0);
}

TEST_CASE("lexicographic family is never log-concave in the published range") {
    auto r1 = verify_lex_family_not_log_concave(2, 24);
    CHECK(r1.violations.empty());
    bool found_k = false;
    for (auto& [k, v] : r1.params)
        if (k == "violating_k") {
            found_k = true;
            CHECK(v == "2");
        }
    CHECK(found_k);

    CHECK(verify_lex_family_not_log_concave(2, 2452).violations.empty());
    CHECK(verify_lex_family_not_log_concave(5, 100).violations.empty());

    // out-of-range parameters are flagged but still evaluated
    auto flagged = verify_lex_family_not_log_concave(1, 10);
    bool has_flag = false;
    for (auto& [k, v] : flagged.params)
        if (k == "outside_published_range") has_flag = true;
    CHECK(has_flag);
}
