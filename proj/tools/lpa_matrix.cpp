// lpa-matrix: command-line front end for the lpa analysis headers.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpa/cli.hpp"

namespace {

struct Options {
    lpa::cli::AnalysisRequest request;
    std::string input;
    std::string inline_json;
    std::string format = "json";
    std::optional<std::size_t> cap_lattice, cap_census, cap_monomials;
    std::string coefficients_vertex;
    std::size_t coefficients_k = 0;
};

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("--input,-i", o.input, "graph JSON file");
    sub->add_option("--json", o.inline_json, "inline graph JSON");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    auto& req = o.request;

    CLI::App app{"Leavitt path algebra matrix analysis"};
    app.set_version_flag("--version", std::string(lpa::cli::kToolVersion));
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cap-lattice", o.cap_lattice, "largest vertex count for lattice enumeration");
    app.add_option("--cap-census", o.cap_census, "largest vertex count for the cycle census");
    app.add_option("--cap-monomials", o.cap_monomials, "largest monomial count for the oracle");
    app.add_option("--seed", req.seed, "seed for selftest");
    app.fallthrough();

    auto* analyze = app.add_subcommand("analyze", "run every analysis");
    add_input(analyze, o);
    analyze->add_flag("--all", req.all, "include census, acyclicity, exitless cycles, paths and shifts");

    auto* ideals = app.add_subcommand("ideals", "hereditary saturated lattice");
    add_input(ideals, o);
    ideals->add_option("--subset", req.subset, "vertex names for a block-form check")->delimiter(',');

    auto* series = app.add_subcommand("series", "matrix composition series");
    add_input(series, o);

    auto* aperiodicity = app.add_subcommand("aperiodicity", "period and aperiodic index");
    add_input(aperiodicity, o);

    auto* cycles = app.add_subcommand("cycles", "cycle counts");
    add_input(cycles, o);
    cycles->add_flag("--total", req.total, "total number of cycles");
    cycles->add_flag("--census", req.census, "per-order product table");
    cycles->add_flag("--acyclic-report", req.acyclic_report, "acyclicity conditions");
    cycles->add_flag("--exitless", req.exitless, "exitless cycles and their block forms");

    auto* paths = app.add_subcommand("paths", "monomial counts");
    add_input(paths, o);
    paths->add_option("--k", req.k, "degree")->required();
    paths->add_flag("--oracle", req.oracle, "cross-check by enumeration");
    paths->add_flag("--table", req.table, "print the norm table");

    auto* talented = app.add_subcommand("talented", "talented monoid expansions");
    add_input(talented, o);
    talented->add_option("--verify-shift", req.verify_shift, "check level-k coefficients against Adj^k");
    auto* coeff = talented->add_option("--coefficients", o.coefficients_vertex, "vertex to expand");
    talented->add_option("--level", o.coefficients_k, "level for --coefficients")->needs(coeff);

    app.add_subcommand("paper-examples", "regression over the worked examples");

    auto* selftest = app.add_subcommand("selftest", "randomized cross-checks");
    selftest->add_option("--rounds", req.rounds, "number of random graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lpa::cli::kUsage;
    }

    try {
        req.caps = lpa::cli::caps_from_environment();
    } catch (const lpa::Error& e) {
        std::cerr << "LPA_MATRIX_CAPS: " << e.what() << "\n";
        return lpa::cli::kUsage;
    }
    if (o.cap_lattice) req.caps.lattice = *o.cap_lattice;
    if (o.cap_census) req.caps.census = *o.cap_census;
    if (o.cap_monomials) req.caps.monomials = *o.cap_monomials;

    req.subcommand = app.get_subcommands().front()->get_name();
    if (!o.input.empty()) req.input_path = o.input;
    if (!o.inline_json.empty()) req.inline_json = o.inline_json;
    if (!o.coefficients_vertex.empty()) req.coefficients = {o.coefficients_vertex, o.coefficients_k};
    req.format = o.format == "table" ? lpa::cli::Format::Table : lpa::cli::Format::Json;

    const auto report = lpa::cli::run(req);
    std::cout << lpa::cli::format_report(report, req.format);
    return report.exit_code;
}
