// Command-line front end: verify | sweep | oracle-check | gen.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "a2m/cli.hpp"
#include "a2m/generators.hpp"
#include "a2m/graph6.hpp"

namespace {

using namespace a2m;

struct Args {
    cli::Options options;
    std::string ell = "all";
    std::string format = "csv";
    std::string input;
    std::string range;
    std::string target;
    // gen
    int n = -1;
    std::string named;
    bool random = false;
    bool no_dedup = false;
    int count = 1;
};

void add_common(CLI::App* cmd, Args& a) {
    cmd->add_flag("--half", a.options.half, "Use the ceil(n/2) form instead of the chromatic form");
    cmd->add_option("--ell", a.ell, "ell to check, or 'all'")->default_str("all");
    cmd->add_option("--emit", a.options.emit_dir, "Write one certificate JSON per (graph, ell) here");
    cmd->add_option("--jobs", a.options.jobs, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", a.options.seed, "Seed (recorded, used by random generation)");
    cmd->add_option("--cap", a.options.cap, "Largest order the brute-force oracle accepts")->check(CLI::PositiveNumber);
    cmd->add_option("--format", a.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
}

void finish_options(Args& a) {
    a.options.format = a.format == "json" ? cli::Format::Json : cli::Format::Csv;
    if (a.ell != "all") {
        try {
            std::size_t used = 0;
            a.options.ell = std::stoi(a.ell, &used);
            if (used != a.ell.size()) throw std::invalid_argument(a.ell);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--ell", "expected an integer or 'all', got '" + a.ell + "'");
        }
    }
}

std::vector<cli::InputLine> read_input(const std::string& path) {
    if (path.empty() || path == "-") return cli::read_lines(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return cli::read_lines(in);
}

int report_exit(const cli::RunReport& report) {
    for (const auto& [phase, secs] : report.timing) std::cerr << "time " << phase << " " << secs << "s\n";
    for (const auto& f : report.failures)
        std::cerr << "FAIL line " << f.line << " " << f.graph6 << " ell=" << f.ell << ": " << f.reason << "\n";
    return report.failed == 0 ? 0 : 1;
}

int run_gen(const Args& a) {
    if (!a.named.empty()) {
        std::cout << emit_graph6(named_graph(a.named)) << "\n";
        return 0;
    }
    if (a.n < 0) throw CLI::ValidationError("gen", "need --n or --named");
    if (a.random) {
        for (int i = 0; i < a.count; ++i) std::cout << emit_graph6(random_alpha2(a.n, a.options.seed + static_cast<std::uint64_t>(i))) << "\n";
        return 0;
    }
    const int cap = a.options.cap > kDefaultExhaustiveCap ? kDefaultExhaustiveCap : a.options.cap;
    for_each_alpha2(a.n, [](const Graph& g) { std::cout << emit_graph6(g) << "\n"; }, !a.no_dedup,
                    std::max(cap, kDefaultExhaustiveCap));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit K^l_{l,m} minor models for graphs with independence number at most two"};
    app.require_subcommand(1);
    Args a;

    auto* verify = app.add_subcommand("verify", "Construct and validate certificates for graph6 input");
    add_common(verify, a);
    verify->add_option("input", a.input, "graph6 file (default: stdin)");

    auto* sweep = app.add_subcommand("sweep", "Exhaustive checks over all graphs of the given orders");
    add_common(sweep, a);
    sweep->add_option("range", a.range, "n or lo..hi")->required();

    auto* oracle = app.add_subcommand("oracle-check", "Compare constructor output with the brute-force oracle");
    add_common(oracle, a);
    oracle->add_option("input", a.input, "graph6 file (default: stdin)");
    oracle->add_option("--target", a.target, "K_k, K^l_{l,m} or l,m (default: construction target per ell)");

    auto* gen = app.add_subcommand("gen", "Print graph6 lines");
    gen->add_option("--n", a.n, "Order")->check(CLI::NonNegativeNumber);
    gen->add_option("--named", a.named, "Named graph expression, e.g. join(cycle(5),cycle(5))");
    gen->add_flag("--random", a.random, "Random maximal-triangle-free complements instead of exhaustive");
    gen->add_option("--count", a.count, "Number of random graphs")->check(CLI::PositiveNumber);
    gen->add_option("--seed", a.options.seed, "First seed");
    gen->add_flag("--no-dedup", a.no_dedup, "Emit every labelled graph");

    try {
        app.parse(argc, argv);
        finish_options(a);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            std::vector<cli::VerifyRow> rows;
            auto report = cli::cmd_verify(read_input(a.input), a.options, &rows);
            std::cout << cli::render_verify(report, rows, a.options.format);
            return report_exit(report);
        }
        if (*sweep) {
            auto [lo, hi] = cli::parse_range(a.range);
            std::vector<cli::SweepRow> rows;
            auto report = cli::cmd_sweep(lo, hi, a.options, &rows);
            std::cout << cli::render_sweep(report, rows, a.options.format);
            return report_exit(report);
        }
        if (*oracle) {
            std::optional<MinorTarget> target;
            if (!a.target.empty()) target = cli::parse_target(a.target);
            std::vector<cli::VerifyRow> rows;
            auto report = cli::cmd_oracle_check(read_input(a.input), target, a.options, &rows);
            std::cout << cli::render_verify(report, rows, a.options.format);
            return report_exit(report);
        }
        return run_gen(a);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
