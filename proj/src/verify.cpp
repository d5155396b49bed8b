#include "wp/verify.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "wp/construct.hpp"
#include "wp/graph6.hpp"
#include "wp/indset.hpp"
#include "wp/polynomial.hpp"

namespace wp {

namespace {

struct WorkerResult {
    GraphOutcome outcome;
    bool timeout = false;
    std::string error;
};

std::string p_set_text(const std::vector<int>& p_set) {
    std::string s;
    for (size_t i = 0; i < p_set.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p_set[i]);
    }
    return s;
}

void require_p_set(const std::vector<int>& p_set, bool allow_p2) {
    if (p_set.empty()) throw std::invalid_argument("empty p set");
    for (int p : p_set) {
        if (p < 1) throw std::invalid_argument("p must be >= 1");
        if (p == 2 && !allow_p2)
            throw std::invalid_argument("p = 2 is outside the statement (p != 2); pass the override to evaluate it anyway");
    }
}

}  // namespace

std::string VerifyReport::json(bool with_elapsed) const {
    nlohmann::json j;
    j["statement"] = statement;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["parameters"] = p;
    j["scanned"] = scanned;
    j["hypothesis_satisfying"] = hypothesis_count;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    j["budget_exceeded"] = budget_exceeded;
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

VerifyReport run_over_stream(const std::string& statement,
                             const std::vector<std::string>& stream, const GraphEval& eval,
                             const RunOptions& options,
                             std::vector<std::pair<std::string, std::string>> params) {
    const auto started = std::chrono::steady_clock::now();
    VerifyReport report;
    report.statement = statement;
    report.params = std::move(params);

    std::vector<WorkerResult> results(stream.size());
    std::atomic<size_t> cursor{0};
    const int workers = std::max(1, options.workers);

    auto work = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= stream.size()) return;
            try {
                Graph g = from_graph6(stream[i]);
                Budget budget = Budget::after(options.per_graph_budget);
                results[i].outcome = eval(g, &budget);
            } catch (const BudgetExceeded&) {
                results[i].timeout = true;
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < stream.size(); ++i) {
        if (!results[i].error.empty())
            throw std::runtime_error("record " + std::to_string(i + 1) + ": " + results[i].error);
        ++report.scanned;
        if (results[i].timeout) {
            report.budget_exceeded.push_back(stream[i]);
            continue;
        }
        report.hypothesis_count += results[i].outcome.hypothesis_hits;
        for (const auto& detail : results[i].outcome.violations)
            report.violations.push_back({stream[i], detail});
    }

    if (!options.detail_jsonl_path.empty()) {
        std::ofstream out(options.detail_jsonl_path);
        if (!out) throw std::runtime_error("cannot write " + options.detail_jsonl_path);
        for (size_t i = 0; i < stream.size(); ++i) {
            nlohmann::json j;
            j["graph6"] = stream[i];
            j["hypothesis_hits"] = results[i].outcome.hypothesis_hits;
            j["violations"] = results[i].outcome.violations;
            j["budget_exceeded"] = results[i].timeout;
            out << j.dump() << '\n';
        }
    }

    // every violation must reproduce in isolation with fresh state
    for (const auto& v : report.violations) {
        Graph g = from_graph6(v.graph6);
        GraphOutcome check = eval(g, nullptr);
        bool found = false;
        for (const auto& d : check.violations)
            if (d == v.detail) found = true;
        if (!found)
            throw std::runtime_error("violation failed to re-verify in isolation: " + v.graph6 +
                                     " (" + v.detail + ")");
    }

    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

VerifyReport verify_quasireg_order_bound(const std::vector<std::string>& stream,
                                         const std::vector<int>& p_set, bool allow_p2,
                                         const RunOptions& options) {
    require_p_set(p_set, allow_p2);
    GraphEval eval = [p_set](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        if (!g.is_connected()) return out;
        for (int p : p_set) {
            if (!is_wp(g, p, budget)) continue;
            ++out.hypothesis_hits;
            const int alpha = independence_number(g, budget);
            const bool qr = is_quasi_regularizable(g, Rational(p), budget);
            const bool big_enough = g.n() >= (p + 1) * alpha;
            if (qr != big_enough) {
                std::ostringstream d;
                d << "p=" << p << ": " << p << "-quasi-regularizable=" << (qr ? "yes" : "no")
                  << " but n=" << g.n() << ", (p+1)*alpha=" << (p + 1) * alpha;
                out.violations.push_back(d.str());
            }
        }
        return out;
    };
    return run_over_stream("mthm", stream, eval, options, {{"p_set", p_set_text(p_set)}});
}

VerifyReport verify_component_closure(const std::vector<std::string>& stream,
                                      const RunOptions& options) {
    GraphEval eval = [](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        const int alpha = independence_number(g, budget);
        const auto comps = g.components();
        const int bound = alpha >= 1 ? g.n() / alpha : 0;
        for (int p = 1; p <= bound; ++p) {
            ++out.hypothesis_hits;
            const bool whole = is_wp(g, p, budget);
            bool each = true;
            for (const auto& comp : comps)
                if (!is_wp(g.induced(comp).graph, p, budget)) {
                    each = false;
                    break;
                }
            if (whole != each) {
                out.violations.push_back("p=" + std::to_string(p) + ": whole-graph verdict " +
                                         (whole ? "true" : "false") + " but components say " +
                                         (each ? "true" : "false"));
            }
            if (whole && g.n() < p * int(comps.size()))
                out.violations.push_back("p=" + std::to_string(p) + ": n < p * c(G)");
        }
        return out;
    };
    return run_over_stream("components", stream, eval, options, {});
}

VerifyReport verify_one_wc_is_w2(const std::vector<std::string>& stream,
                                 const RunOptions& options) {
    GraphEval eval = [](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        if (g.n() < 2 || g.has_isolated_vertex()) return out;
        ++out.hypothesis_hits;
        const bool owc = is_one_well_covered(g, budget);
        const bool w2 = is_wp(g, 2, budget);
        if (owc != w2)
            out.violations.push_back(std::string("1-well-covered=") + (owc ? "yes" : "no") +
                                     " but W_2=" + (w2 ? "yes" : "no"));
        return out;
    };
    return run_over_stream("th4", stream, eval, options, {});
}

VerifyReport verify_interval_log_concavity(const std::vector<std::string>& stream,
                                           const std::vector<int>& p_set, bool allow_p2,
                                           const RunOptions& options) {
    require_p_set(p_set, allow_p2);
    GraphEval eval = [p_set](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        const auto comps = g.components();
        for (int p : p_set) {
            bool in_interval = true;
            for (const auto& comp : comps) {
                Graph h = g.induced(comp).graph;
                if (log_concavity_interval(h.n(), independence_number(h, budget), p) ==
                    IntervalCase::Outside) {
                    in_interval = false;
                    break;
                }
            }
            if (!in_interval || !is_wp(g, p, budget)) continue;
            ++out.hypothesis_hits;
            auto lc = is_log_concave(independence_polynomial(g, budget));
            if (!lc.log_concave)
                out.violations.push_back("p=" + std::to_string(p) +
                                         ": polynomial not log-concave at k=" +
                                         std::to_string(lc.violating_k));
        }
        return out;
    };
    return run_over_stream("log2", stream, eval, options, {{"p_set", p_set_text(p_set)}});
}

VerifyReport verify_coefficient_bounds(const std::vector<std::string>& stream,
                                       const RunOptions& options) {
    GraphEval eval = [](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        const Polynomial poly = independence_polynomial(g, budget);
        const int alpha = poly.degree();

        if (alpha >= 1) {
            ++out.hypothesis_hits;
            if (!top_coefficient_bound_holds(poly, g.n()))
                out.violations.push_back("top-coefficient bound fails");
        }

        const Rational threshold = qr_threshold(g, budget);
        if (threshold.num > 0) {
            ++out.hypothesis_hits;
            if (!quasireg_coefficient_bounds_hold(poly, g.n(), threshold))
                out.violations.push_back("quasi-regular upper bounds fail at lambda=" +
                                         threshold.str());
        }

        if (g.is_connected()) {
            const int cap = std::min(3, alpha >= 1 ? g.n() / alpha : 0);
            for (int p = 1; p <= cap; ++p) {
                if (!is_wp(g, p, budget)) break;  // W_1 >= W_2 >= ... is a chain
                ++out.hypothesis_hits;
                if (!wp_coefficient_bounds_hold(poly, alpha, p))
                    out.violations.push_back("W_p growth bounds fail at p=" + std::to_string(p));
            }
        }
        return out;
    };
    return run_over_stream("coeffs", stream, eval, options, {});
}

VerifyReport verify_very_well_covered_log_concave(const std::vector<std::string>& stream,
                                                  const RunOptions& options) {
    GraphEval eval = [](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        if (g.n() < 2 || g.has_isolated_vertex()) return out;
        const Polynomial poly = independence_polynomial(g, budget);
        const int alpha = poly.degree();
        if (alpha > 5 || g.n() != 2 * alpha || !is_well_covered(g, budget)) return out;
        ++out.hypothesis_hits;
        auto lc = is_log_concave(poly);
        if (!lc.log_concave)
            out.violations.push_back("not log-concave at k=" + std::to_string(lc.violating_k));
        return out;
    };
    return run_over_stream("vwc", stream, eval, options, {});
}

VerifyReport hunt_two_quasireg_conjecture(const std::vector<std::string>& stream,
                                          const RunOptions& options) {
    GraphEval eval = [](const Graph& g, const Budget* budget) {
        GraphOutcome out;
        if (!g.is_connected() || !is_wp(g, 2, budget)) return out;
        ++out.hypothesis_hits;
        const int alpha = independence_number(g, budget);
        const bool qr2 = is_quasi_regularizable(g, Rational(2), budget);
        const bool big_enough = g.n() >= 3 * alpha;
        if (qr2 != big_enough) {
            std::ostringstream d;
            d << "2-quasi-regularizable=" << (qr2 ? "yes" : "no") << " but n=" << g.n()
              << ", 3*alpha=" << 3 * alpha;
            out.violations.push_back(d.str());
        }
        return out;
    };
    return run_over_stream("hunt", stream, eval, options, {});
}

VerifyReport verify_lex_family_not_log_concave(long m, long parts) {
    const auto started = std::chrono::steady_clock::now();
    VerifyReport report;
    report.statement = "example";
    report.params = {{"m", std::to_string(m)}, {"n", std::to_string(parts)}};
    if (m < 2 || parts < 24 || parts > 2452)
        report.params.emplace_back("outside_published_range", "true");

    const Polynomial h = counterexample_h_polynomial(parts);
    const Polynomial product = compose_shifted(Polynomial({1, m}), h);
    ++report.scanned;
    ++report.hypothesis_count;
    auto lc = is_log_concave(product);
    if (lc.log_concave) {
        report.violations.push_back(
            {"", "expected non-log-concave product, got log-concave: " + product.text()});
    } else {
        report.params.emplace_back("violating_k", std::to_string(lc.violating_k));
        report.params.emplace_back("product_poly", product.text());
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

}  // namespace wp
