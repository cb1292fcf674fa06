#include <iostream>

#include "CLI11.hpp"
#include "picard/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for Weierstrass curves, their automorphisms and level structures"};
    app.name("picard-lab");
    app.require_subcommand(1);

    std::string suite;
    picard::VerifyOptions options;
    bool json = false;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suites = "all";
    for (const auto& s : picard::suite_names()) suites += ", " + s;
    verify->add_option("suite", suite, "One of: " + suites)->required();
    verify->add_option("--precision", options.precision, "Series truncation N (default 24)");
    verify->add_option("--seed", options.seed, "Seed for randomized identity checks (default 0)");
    verify->add_option("--group", options.group, "Cohomology group: s3, sl2f3 or z2-trivial (default: all)");
    verify->add_flag("--json", json, "Key-ordered JSON output");
    verify->add_flag("--serial", serial, "Use the serial reference kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (serial) options.policy = picard::ExecutionPolicy::Serial;
    try {
        const auto results = picard::run(suite, options);
        if (json) {
            std::cout << picard::to_json(results, options).dump(2) << "\n";
        } else {
            std::cout << picard::to_text(results, options);
        }
        return picard::all_passed(results) ? 0 : 1;
    } catch (const picard::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
