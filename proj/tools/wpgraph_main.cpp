// wpgraph: independence-polynomial and W_p class analytics over graph6
// streams, edge lists, or construction expressions.
//
// Exit codes: 0 success / all true / no violations, 1 a check came back
// false, 2 operational error (bad input, bad flags), 3 verify or hunt found
// violations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wp/construct.hpp"
#include "wp/expr.hpp"
#include "wp/graph6.hpp"
#include "wp/indset.hpp"
#include "wp/verify.hpp"

namespace {

struct CommonOptions {
    std::string input_path;   // empty = stdin
    std::string format = "graph6";
    std::string output_path;  // empty = stdout
    bool json = false;
    int workers = 0;          // 0 = unset
    long budget_ms = 5000;
    std::string jsonl_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_pool) {
    cmd->add_option("-i,--input", opt.input_path, "input file (default: standard input)");
    cmd->add_option("--format", opt.format, "graph6 | edges | expr")
        ->check(CLI::IsMember({"graph6", "edges", "expr"}));
    cmd->add_option("-o,--output", opt.output_path, "output file (default: standard output)");
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    if (with_pool) {
        cmd->add_option("--workers", opt.workers,
                        "worker count (default: WP_WORKERS or hardware concurrency)");
        cmd->add_option("--budget-ms", opt.budget_ms, "per-graph time budget in milliseconds");
        cmd->add_option("--jsonl", opt.jsonl_path, "write per-graph detail JSONL here");
    }
}

int default_workers() {
    if (const char* env = std::getenv("WP_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const CommonOptions& opt) {
    if (opt.input_path.empty()) return read_all(std::cin);
    std::ifstream f(opt.input_path);
    if (!f) throw std::runtime_error("cannot open " + opt.input_path);
    return read_all(f);
}

struct Record {
    std::string id;  // the graph6 record or the source expression
    wp::Graph graph;
};

// one record per nonempty line for graph6/expr, the whole input for edges
std::vector<Record> load_records(const CommonOptions& opt) {
    std::vector<Record> records;
    const std::string text = read_input(opt);
    if (opt.format == "edges") {
        if (text.find_first_not_of(" \t\r\n") == std::string::npos) return records;
        records.push_back({"edges", wp::from_edge_list(text)});
        return records;
    }
    std::istringstream lines(text);
    std::string line;
    long line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        try {
            if (opt.format == "graph6")
                records.push_back({line, wp::from_graph6(line)});
            else
                records.push_back({line, wp::parse_construction(line)});
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

std::ostream& open_output(const CommonOptions& opt, std::ofstream& file) {
    if (opt.output_path.empty()) return std::cout;
    file.open(opt.output_path);
    if (!file) throw std::runtime_error("cannot write " + opt.output_path);
    return file;
}

int cmd_poly(const CommonOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    for (const auto& rec : load_records(opt)) {
        wp::Polynomial poly = wp::independence_polynomial(rec.graph);
        auto lc = wp::is_log_concave(poly);
        auto um = wp::is_unimodal(poly);
        if (opt.json) {
            nlohmann::json j;
            j["graph"] = rec.id;
            j["poly"] = poly.text();
            j["alpha"] = poly.degree();
            j["log_concave"] = lc.log_concave;
            j["unimodal"] = um.unimodal;
            out << j.dump() << '\n';
        } else {
            out << rec.id << ' ' << poly.text() << " alpha=" << poly.degree()
                << " lc=" << (lc.log_concave ? "yes" : "no")
                << " um=" << (um.unimodal ? "yes" : "no") << '\n';
        }
    }
    return 0;
}

// wellcovered | 1wc | wp(p) | quasireg(num/den) | logconcave | unimodal
std::function<bool(const wp::Graph&)> make_property(const std::string& spec) {
    auto arg_of = [&](const std::string& name) -> std::string {
        if (spec.size() < name.size() + 2 || spec.back() != ')') return {};
        return spec.substr(name.size() + 1, spec.size() - name.size() - 2);
    };
    if (spec == "wellcovered") return [](const wp::Graph& g) { return wp::is_well_covered(g); };
    if (spec == "1wc") return [](const wp::Graph& g) { return wp::is_one_well_covered(g); };
    if (spec == "logconcave")
        return [](const wp::Graph& g) {
            return wp::is_log_concave(wp::independence_polynomial(g)).log_concave;
        };
    if (spec == "unimodal")
        return [](const wp::Graph& g) {
            return wp::is_unimodal(wp::independence_polynomial(g)).unimodal;
        };
    if (spec.rfind("wp(", 0) == 0) {
        int p = 0;
        try {
            p = std::stoi(arg_of("wp"));
        } catch (...) {
            throw std::runtime_error("bad wp(p) argument in '" + spec + "'");
        }
        return [p](const wp::Graph& g) { return wp::is_wp(g, p); };
    }
    if (spec.rfind("quasireg(", 0) == 0) {
        auto lambda = wp::Rational::parse(arg_of("quasireg"));
        if (!lambda) throw std::runtime_error("bad lambda in '" + spec + "' (expected num/den)");
        return [l = *lambda](const wp::Graph& g) { return wp::is_quasi_regularizable(g, l); };
    }
    throw std::runtime_error("unknown property '" + spec + "'");
}

int cmd_check(const CommonOptions& opt, const std::string& property) {
    auto predicate = make_property(property);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    bool all_true = true;
    for (const auto& rec : load_records(opt)) {
        bool verdict = predicate(rec.graph);
        all_true = all_true && verdict;
        if (opt.json) {
            nlohmann::json j;
            j["graph"] = rec.id;
            j["property"] = property;
            j["verdict"] = verdict;
            out << j.dump() << '\n';
        } else {
            out << rec.id << ' ' << (verdict ? "true" : "false") << '\n';
        }
    }
    return all_true ? 0 : 1;
}

int cmd_classify(const CommonOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    for (const auto& rec : load_records(opt)) {
        try {
            out << wp::class_report_json(wp::classify(rec.graph), rec.id) << '\n';
        } catch (const std::exception& e) {
            nlohmann::json j;
            j["graph6"] = rec.id;
            j["error"] = e.what();
            out << j.dump() << '\n';
        }
    }
    return 0;
}

std::vector<std::string> stream_of(const CommonOptions& opt) {
    std::vector<std::string> stream;
    for (const auto& rec : load_records(opt))
        stream.push_back(opt.format == "graph6" ? rec.id : wp::to_graph6(rec.graph));
    return stream;
}

int emit_report(const CommonOptions& opt, const wp::VerifyReport& report) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.json || !opt.output_path.empty()) {
        out << report.json() << '\n';
    } else {
        out << "statement: " << report.statement << '\n';
        for (const auto& [k, v] : report.params) out << "  " << k << ": " << v << '\n';
        out << "scanned: " << report.scanned
            << "  hypothesis-satisfying: " << report.hypothesis_count
            << "  violations: " << report.violations.size()
            << "  budget-exceeded: " << report.budget_exceeded.size() << "  elapsed: " << long(report.elapsed_ms)
            << "ms\n";
        for (const auto& v : report.violations)
            out << "violation " << v.graph6 << ": " << v.detail << '\n';
        for (const auto& g : report.budget_exceeded) out << "budget-exceeded " << g << '\n';
    }
    return report.violations.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence polynomials, W_p classes, and theorem harnesses"};
    app.require_subcommand(1);

    CommonOptions poly_opt, check_opt, classify_opt, verify_opt, hunt_opt;
    std::string property;
    std::string statement;
    std::string p_set_text = "1";
    bool allow_p2 = false;
    long example_m = 2, example_n = 24;

    CLI::App* poly = app.add_subcommand("poly", "independence polynomial per input graph");
    add_common(poly, poly_opt, false);

    CLI::App* check = app.add_subcommand("check", "evaluate a predicate per input graph");
    check->add_option("property", property,
                      "wellcovered | 1wc | wp(p) | quasireg(num/den) | logconcave | unimodal")
        ->required();
    add_common(check, check_opt, false);

    CLI::App* classify = app.add_subcommand("classify", "full ClassReport JSONL per graph");
    add_common(classify, classify_opt, false);

    CLI::App* verify = app.add_subcommand("verify", "run a statement harness over the stream");
    verify->add_option("statement", statement, "mthm | components | th4 | log2 | coeffs | vwc | example")
        ->required();
    verify->add_option("--p", p_set_text, "comma-separated p values (mthm, log2)");
    verify->add_flag("--allow-p2", allow_p2, "evaluate the excluded case p = 2 anyway");
    verify->add_option("--m", example_m, "m parameter of the example statement");
    verify->add_option("--n", example_n, "n parameter of the example statement");
    add_common(verify, verify_opt, true);

    CLI::App* hunt = app.add_subcommand("hunt", "hunt for conjecture counterexamples");
    add_common(hunt, hunt_opt, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) return cmd_poly(poly_opt);
        if (check->parsed()) return cmd_check(check_opt, property);
        if (classify->parsed()) return cmd_classify(classify_opt);

        auto run_options = [&](const CommonOptions& opt) {
            wp::RunOptions o;
            o.workers = opt.workers >= 1 ? opt.workers : default_workers();
            o.per_graph_budget = std::chrono::milliseconds(opt.budget_ms);
            o.detail_jsonl_path = opt.jsonl_path;
            return o;
        };

        if (hunt->parsed())
            return emit_report(hunt_opt,
                               wp::hunt_two_quasireg_conjecture(stream_of(hunt_opt),
                                                                run_options(hunt_opt)));

        // verify
        std::vector<int> p_set;
        {
            std::istringstream ss(p_set_text);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) p_set.push_back(std::stoi(tok));
        }
        wp::VerifyReport report;
        if (statement == "mthm")
            report = wp::verify_quasireg_order_bound(stream_of(verify_opt), p_set, allow_p2,
                                                     run_options(verify_opt));
        else if (statement == "components")
            report = wp::verify_component_closure(stream_of(verify_opt), run_options(verify_opt));
        else if (statement == "th4")
            report = wp::verify_one_wc_is_w2(stream_of(verify_opt), run_options(verify_opt));
        else if (statement == "log2")
            report = wp::verify_interval_log_concavity(stream_of(verify_opt), p_set, allow_p2,
                                                       run_options(verify_opt));
        else if (statement == "coeffs")
            report = wp::verify_coefficient_bounds(stream_of(verify_opt), run_options(verify_opt));
        else if (statement == "vwc")
            report = wp::verify_very_well_covered_log_concave(stream_of(verify_opt),
                                                              run_options(verify_opt));
        else if (statement == "example")
            report = wp::verify_lex_family_not_log_concave(example_m, example_n);
        else
            throw std::runtime_error("unknown statement '" + statement + "'");
        return emit_report(verify_opt, report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
