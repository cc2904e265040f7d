#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hilbgen/cli.hpp"

namespace {

using hilbgen::cli::OutputFormat;
using hilbgen::cli::RunConfig;

int run_to_sink(const RunConfig& cfg, const std::function<int(std::ostream&)>& body) {
    std::ostringstream buffer;
    int code;
    try {
        code = body(buffer);
    } catch (const hilbgen::Error& e) {
        code = hilbgen::cli::render_error(cfg, e, buffer);
    }
    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file " << *cfg.output_path
                      << "\n";
            return 2;
        }
        file << buffer.str();
    } else {
        std::cout << buffer.str();
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition functions of invariant Hilbert schemes on "
                 "Abelian surfaces: eta products, certification, and curve "
                 "count tables"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::string out_path;
    app.add_option("--order", cfg.truncation_order,
                   "series truncation order (default 200)");
    app.add_option("--format", format, "output format: text|json|csv");
    app.add_option("--out", out_path, "write output to a file");
    app.add_option("--seed", cfg.seed, "pseudorandom seed (default 0)");
    app.add_option("--tol", cfg.tolerance, "numeric tolerance (default 1e-8)");

    int row = 0;
    long dmax = 7, hmax = -1, bound = 20, terms = 200, search_bound = 30;
    long level = 0, qpower = 1;
    std::size_t samples = 10;
    bool check_paper = false, verify = false, invert = false;
    std::string group_text = "Z2", eta_text;

    CLI::App* table1 = app.add_subcommand(
        "table1", "verify and print the eleven catalog rows");
    table1->add_option("--row", row, "restrict to one row (1-11)");

    CLI::App* table2 = app.add_subcommand(
        "table2", "curve-count table of normalized invariants");
    table2->add_option("--dmax", dmax, "largest degree (default 7)");
    table2->add_option("--hmax", hmax, "largest genus (default dmax+1)");
    table2->add_flag("--check-paper", check_paper,
                     "compare d<=7, h<=4 against the published reference values");

    CLI::App* classify = app.add_subcommand(
        "classify", "enumerate singularity types satisfying the Euler constraint");
    classify->add_option("--group", group_text,
                         "group tag: trivial|Z2|Z3|Z4|Z6|Q|D|T")
        ->required();

    CLI::App* derive = app.add_subcommand(
        "derive-local", "derive the D/E local factors and match the quotient template");
    derive->add_option("--search-bound", search_bound,
                       "template parameter search bound (default 30)");

    CLI::App* modular = app.add_subcommand(
        "modular-check", "measure transformation multipliers numerically");
    modular->add_option("--row", row, "restrict to one row (1-11)");
    modular->add_option("--samples", samples, "matrices per row (default 10)");
    modular->add_option("--bound", bound, "entry bound (raised to the level if below)");
    modular->add_option("--terms", terms, "base product term count (default 200)");

    CLI::App* hyper = app.add_subcommand(
        "hyperelliptic", "hyperelliptic curve count table");
    hyper->add_option("--dmax", dmax, "largest degree (default 7)");
    hyper->add_flag("--verify", verify, "check the genus-0 weighted-sum identity");

    CLI::App* expand = app.add_subcommand("expand", "expand an eta product string");
    expand->add_option("--eta", eta_text, "e.g. \"eta(q)^16 * eta(q^2)^-8\"")
        ->required();
    expand->add_option("--level", level, "level (default: lcm of the scales)");
    expand->add_flag("--invert", invert, "expand the reciprocal");
    expand->add_option("--qpower", qpower, "substitute q -> q^m afterwards");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        cfg.format = hilbgen::cli::parse_format(format);
    } catch (const hilbgen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!out_path.empty()) cfg.output_path = out_path;
    std::optional<int> row_filter;
    if (row != 0) row_filter = row;

    if (*table1)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_table1(cfg, row_filter, out);
        });
    if (*table2)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_table2(cfg, dmax, hmax, check_paper, out);
        });
    if (*classify)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_classify(
                cfg, hilbgen::parse_group_tag(group_text), out);
        });
    if (*derive)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_derive_local(cfg, search_bound, out);
        });
    if (*modular)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_modular_check(cfg, row_filter, samples, bound,
                                                   terms, out);
        });
    if (*hyper)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_hyperelliptic(cfg, dmax, verify, out);
        });
    if (*expand)
        return run_to_sink(cfg, [&](std::ostream& out) {
            return hilbgen::cli::cmd_expand(cfg, eta_text, level, invert, qpower, out);
        });
    return 2;
}
