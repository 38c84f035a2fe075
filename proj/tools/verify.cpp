// verify: run the named check suites and emit a machine-readable report.
//
//   verify <suite>|all [--depth N] [--budget M] [--format json|text] [--list]
//
// Exit codes: 0 = all checks pass (assumption lines allowed), 1 = at least
// one failed check, 2 = usage error (including an unknown suite name).

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "kleinian/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verifier for the tangle-cover catalog"};
    app.get_formatter()->column_width(30);

    std::string suite;
    int depth = 6;
    long budget = 2000000;
    std::string format = "text";
    bool list = false;

    app.add_option("suite", suite, "suite name (see --list) or 'all'");
    app.add_option("--depth", depth, "default word-search radius")
        ->envname("VERIFY_DEPTH")
        ->check(CLI::Range(0, 14));
    app.add_option("--budget", budget, "node budget for ball enumeration")
        ->envname("VERIFY_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format: json or text")
        ->envname("VERIFY_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--list", list, "list the available suites and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& info : kleinian::list_suites()) {
            std::cout << info.name << "\t" << info.description << "\t[" << info.anchor << "]\n";
        }
        return 0;
    }
    if (suite.empty()) {
        std::cerr << "usage: verify <suite>|all [--depth N] [--budget M] [--format json|text] "
                     "[--list]\n";
        return 2;
    }

    kleinian::SuiteConfig config;
    config.depth = depth;
    config.depth_delta0 = std::max(8, depth);
    config.budget = budget;

    try {
        kleinian::SuiteReport report = kleinian::run_suite(suite, config);
        std::cout << (format == "json" ? kleinian::to_json(report) : kleinian::to_text(report))
                  << "\n";
        return report.all_ok() ? 0 : 1;
    } catch (const kleinian::UnknownSuite& e) {
        std::cerr << e.what() << "; use --list to see the available names\n";
        return 2;
    }
}
