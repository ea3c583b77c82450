#include "superq/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace superq::cli;
    Config cfg;
    CLI::App app{"Semisimplified representation categories of Gl(m|1) and Sl(m|1)"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string group = "gl", output = "json";
    app.add_option("--group", group, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
    app.add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--normalize-parity", cfg.normalize_parity, "parity-shift summands to positive superdimension");
    app.add_option("--oracle-dim-bound", cfg.oracle_dim_bound, "largest tensor dimension handed to the oracle");

    std::string weight, x, y, method = "direct", suite, report = "calibration_report.json";
    auto* diagram = app.add_subcommand("diagram", "draw the weight diagram of a1,...,am/b");
    diagram->add_option("--m", cfg.m, "rank m")->required();
    diagram->add_option("--weight", weight, "weight a1,...,am/b")->required();

    auto* tensor = app.add_subcommand("tensor", "decompose a tensor product in the quotient");
    tensor->add_option("x", x, "label or weight")->required();
    tensor->add_option("y", y, "label or weight")->required();
    tensor->add_option("--method", method, "direct, rho, oracle or all");
    tensor->add_option("--m", cfg.m, "rank m (checked against the labels)");

    auto* check = app.add_subcommand("check", "run an acceptance suite (or 'all')");
    check->add_option("suite", suite, "suite name")->required();
    check->add_option("--report", report, "calibration report path, written if absent ('' to skip)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.group = group == "sl" ? Group::sl : Group::gl;
    cfg.output = output == "table" ? Output::table : Output::json;
    try {
        CommandResult r;
        if (*diagram) r = cmd_diagram(cfg, weight);
        else if (*tensor) r = cmd_tensor(cfg, x, y, method);
        else r = cmd_check(cfg, suite, report);
        if (cfg.output == Output::json) std::cout << r.json.dump(2) << "\n";
        else std::cout << r.table;
        return r.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
