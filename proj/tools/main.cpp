// bridgemap: epimorphisms between 2-bridge knot groups from the command line.
//
// Exit codes: 0 success or "yes", 1 "no" or mismatch, 2 usage or input error.

#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace bridgemap::cli;

    CLI::App app{"Epimorphisms between 2-bridge knot groups"};
    app.require_subcommand(1);

    std::string knot, source, target, filter = "all", mode = "brute", format = "csv", vars = "gc", fixtures;
    std::int64_t max_crossing = 0;
    std::optional<std::int64_t> genus, max_genus;
    bool json = false, degree_one = false;
    std::vector<int> tables;

    auto* info = app.add_subcommand("info", "Invariants of K(q/p)");
    info->add_option("knot", knot, "Rational q/p")->required();
    info->add_flag("--json", json, "Emit JSON");

    auto* check = app.add_subcommand("check", "Does G(source) surject onto G(target)?");
    check->add_option("source", source, "Source q/p")->required();
    check->add_option("target", target, "Target q/p")->required();
    check->add_flag("--degree-one", degree_one, "Require a degree-one witness");
    check->add_flag("--json", json, "Emit JSON");

    auto* count = app.add_subcommand("count", "Count sources by genus and crossing");
    count->add_option("--target", target, "Target q/p")->required();
    count->add_option("--max-crossing", max_crossing, "Largest source crossing number")->required();
    count->add_option("--filter", filter, "Source filter")
        ->check(CLI::IsMember({"all", "fibered", "degree-one", "unknotting-one"}));
    count->add_option("--mode", mode, "closed, brute or both")->check(CLI::IsMember({"closed", "brute", "both"}));
    count->add_option("--format", format, "csv, json or grid")->check(CLI::IsMember({"csv", "json", "grid"}));

    auto* series = app.add_subcommand("series", "Generating-function coefficients");
    series->add_option("--target", target, "Target q/p")->required();
    series->add_option("--max-crossing", max_crossing, "Largest crossing exponent")->required();
    series->add_option("--vars", vars, "gc (two variables) or c (one)")->check(CLI::IsMember({"gc", "c"}));

    auto* classify = app.add_subcommand("classify-genus", "Number of sources of a given genus: 0, 1 or infinite");
    classify->add_option("--target", target, "Target q/p")->required();
    auto* g_opt = classify->add_option("--genus", genus, "Single genus");
    classify->add_option("--max-genus", max_genus, "List genera 1..N")->excludes(g_opt);

    auto* enumerate = app.add_subcommand("enumerate", "List every source up to a crossing bound");
    enumerate->add_option("--target", target, "Target q/p")->required();
    enumerate->add_option("--max-crossing", max_crossing, "Largest source crossing number")->required();
    enumerate->add_option("--filter", filter, "Source filter")
        ->check(CLI::IsMember({"all", "fibered", "degree-one", "unknotting-one"}));
    enumerate->add_flag("--json", json, "Emit JSON");

    auto* verify = app.add_subcommand("verify-tables", "Regenerate the count tables and diff them against fixtures");
    verify->add_option("--fixtures", fixtures, "Directory of tableN.csv files (default: built-in)");
    verify->add_option("--table", tables, "Only these table numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (*info) return cmd_info(knot, json, std::cout);
        if (*check) return cmd_check(source, target, degree_one, json, std::cout);
        if (*count) return cmd_count({target, max_crossing, filter, mode, format}, std::cout, std::cerr);
        if (*series) return cmd_series(target, max_crossing, vars, std::cout);
        if (*classify) return cmd_classify_genus(target, genus, max_genus, std::cout);
        if (*enumerate) return cmd_enumerate(target, max_crossing, filter, json, std::cout);
        if (*verify) return cmd_verify_tables(fixtures, tables, std::cout);
    } catch (const bridgemap::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
