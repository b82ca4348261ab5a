// Command-line front end: one subcommand per verification cluster, with
// JSON or text reports.  Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage error.

#include <iostream>

#include "CLI11.hpp"
#include "modinv/errors.hpp"
#include "modinv/report.hpp"

namespace {

void add_common(CLI::App* cmd, modinv::RunConfig& config) {
    cmd->add_option("--q-exp", config.s, "field exponent s, q = 2^s")
        ->check(CLI::Range(2, 16))
        ->capture_default_str();
    cmd->add_option("--max-degree", config.max_degree, "degree cutoff (default per command)");
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--cache", config.cache_path, "graded-dimension cache file");
    cmd->add_option("--modulus", config.modulus_csv,
                    "modulus override as comma-separated exponents, e.g. 2,1,0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for two-dimensional orthogonal-group "
                 "vector invariants over GF(2^s)"};
    app.require_subcommand(1);
    modinv::RunConfig config;

    auto* group = app.add_subcommand("group", "enumerate a group and cross-validate it");
    add_common(group, config);
    group->add_option("--type", config.group, "group type")
        ->check(CLI::IsMember({"plus", "minus", "sylow"}))
        ->capture_default_str();

    auto* generators = app.add_subcommand("generators", "list a generator family");
    add_common(generators, config);
    generators->add_option("--m", config.m, "number of vector copies")->check(CLI::Range(1, 16));
    generators->add_option("--family", config.group, "family")
        ->check(CLI::IsMember({"plus", "sylow", "minus"}))
        ->capture_default_str();

    auto* dims = app.add_subcommand("dims", "graded invariant dimensions");
    add_common(dims, config);
    dims->add_option("--m", config.m, "number of vector copies")->check(CLI::Range(1, 16));
    dims->add_option("--group", config.group, "group type")
        ->check(CLI::IsMember({"plus", "minus", "sylow"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, config);
    verify->add_option("--m", config.m, "number of vector copies")->check(CLI::Range(1, 16));
    verify->add_flag("--generation", config.generation, "subalgebra closure vs invariant dims");
    verify->add_flag("--minimality", config.minimality, "minimal generator counts");
    verify->add_flag("--free-module", config.free_module, "two-copy free module structure");
    verify->add_flag("--hilbert-ideal", config.hilbert_ideal, "graded ideal equality");
    verify->add_flag("--transfer-suite", config.transfer_suite, "transfer membership suite");
    verify->add_flag("--identity-suite", config.identity_suite, "two-copy identity suite");
    verify->add_flag("--all", config.all, "everything above");

    auto* noether = app.add_subcommand("noether", "top minimal generator degree");
    add_common(noether, config);
    noether->add_option("--m", config.m, "number of vector copies")->check(CLI::Range(1, 16));

    auto* o2minus = app.add_subcommand("o2minus", "minus-type enumeration and reports");
    add_common(o2minus, config);

    auto* report = app.add_subcommand("report", "full report across all suites");
    add_common(report, config);
    report->add_option("--m", config.m, "number of vector copies")->check(CLI::Range(1, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "verify" && !(config.generation || config.minimality ||
                                        config.free_module || config.hilbert_ideal ||
                                        config.transfer_suite || config.identity_suite ||
                                        config.all)) {
        std::cerr << "verify: select at least one suite (or --all)\n";
        return 2;
    }

    try {
        const modinv::ReportDocument doc = modinv::run(config);
        if (config.format == "json")
            std::cout << modinv::to_json(doc);
        else
            std::cout << modinv::to_text(doc);
        return doc.exit_code();
    } catch (const modinv::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
