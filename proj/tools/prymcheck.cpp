// prymcheck: run verification suites and print a canonical report.
//
//   prymcheck verify-all [--strict] [--json report.json]
//   prymcheck euler --mode derived
//   prymcheck invariants --config configs/actions.json
//
// Exit codes: 0 pass, 1 discrepancy, 2 check failure (--strict only), 3 input error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "prymcheck/config.hpp"
#include "prymcheck/suites.hpp"

namespace {

constexpr int input_error = 3;

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of invariant rings, enumerative counts and Euler characteristic ledgers"};
    app.require_subcommand(1, 1);

    std::string config_path, json_path, mode = "paper", check_filter;
    bool strict = false, metadata = false;

    for (auto name : prymcheck::suites::subcommands) {
        auto* sub = app.add_subcommand(std::string(name));
        sub->add_option("--config", config_path, "JSON config document")->check(CLI::ExistingFile);
        sub->add_option("--mode", mode, "ledger mode")->check(CLI::IsMember({"paper", "derived"}));
        sub->add_flag("--strict", strict, "nonzero exit on discrepancies and failures");
        sub->add_option("--json", json_path, "write the JSON report to this path");
        sub->add_option("--check", check_filter, "keep only checks whose name contains this string");
        sub->add_flag("--metadata", metadata, "add a timestamped metadata block to the JSON report");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : input_error;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    prymcheck::suites::Options opt;
    opt.mode = mode == "derived" ? prymcheck::LedgerMode::derived : prymcheck::LedgerMode::paper;

    std::optional<prymcheck::report::Report> report;
    try {
        std::optional<prymcheck::config::ConfigDocument> doc;
        if (!config_path.empty())
            doc = prymcheck::config::load(config_path);
        report = prymcheck::suites::run_subcommand(name, doc, opt);
    } catch (const prymcheck::error& e) {
        std::cerr << "prymcheck: input error: " << e.what() << "\n";
        return input_error;
    }
    report->filter(check_filter);

    std::cout << report->to_text();
    if (!json_path.empty()) {
        auto j = report->to_json();
        if (metadata)
            j["metadata"] = {{"generated_at", utc_now()}, {"config", config_path}};
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "prymcheck: cannot write " << json_path << "\n";
            return input_error;
        }
        out << j.dump(2) << "\n";
    }
    return report->exit_code(strict);
}
