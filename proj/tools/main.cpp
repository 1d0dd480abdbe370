#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "distinv/cli.hpp"
#include "distinv/errors.hpp"

namespace {

using namespace distinv;

struct InputArg {
    std::string path = "-";

    int with_stream(const std::function<int(std::istream&)>& fn) const {
        if (path == "-") return fn(std::cin);
        std::ifstream file(path);
        if (!file) {
            std::cout << R"({"error":{"kind":"parse","message":"cannot open )" << path
                      << R"("}})" << "\n";
            return cli::kExitUsage;
        }
        return fn(file);
    }
};

void add_caps_flags(CLI::App* cmd, Caps& caps) {
    cmd->add_option_function<std::uint64_t>(
        "--cap",
        [&caps](const std::uint64_t& v) {
            caps.labeling_space = v;
            caps.product_space = v;
            caps.sequence_space = v;
        },
        "Work cap for labeling/product/sequence spaces");
    cmd->add_option("--group-cap", caps.group_order, "Stored automorphism cap");
    cmd->add_option("--jobs", caps.jobs, "Worker threads (0 = all cores)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graph symmetry-breaking invariants: distinguishing and list "
                 "distinguishing numbers, their proper-coloring analogues, and the "
                 "counting machinery behind them"};
    app.require_subcommand(1);

    // invariants
    cli::InvariantsOptions inv_options;
    InputArg inv_input;
    auto* inv = app.add_subcommand("invariants", "Compute all invariants of one graph as JSON");
    inv->add_option("input", inv_input.path, "Input file or - for stdin");
    inv->add_option("--format", inv_options.format, "auto|graph6|edges")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}));
    inv->add_option("--list-path", inv_options.list_path, "direct|char|both")
        ->check(CLI::IsMember({"direct", "char", "both"}));
    inv->add_flag("--skip-list", inv_options.skip_list, "Skip list-number computation");
    inv->add_flag("--timing", inv_options.with_timing, "Include per-stage timing");
    int inv_m_max = 0, inv_k_max = 0;
    inv->add_option("--m-max", inv_m_max, "Override characterization sweep bound");
    inv->add_option("--k-max", inv_k_max, "Override direct-path list size bound");
    add_caps_flags(inv, inv_options.caps);

    // listnum
    cli::ListnumOptions ln_options;
    InputArg ln_input;
    std::string ln_pred = "dist";
    auto* ln = app.add_subcommand("listnum", "List-number report for one graph as JSON");
    ln->add_option("input", ln_input.path, "Input file or - for stdin");
    ln->add_option("--format", ln_options.format, "auto|graph6|edges")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}));
    ln->add_option("--pred", ln_pred, "dist|proper|propdist")
        ->check(CLI::IsMember({"dist", "proper", "propdist"}));
    ln->add_option("--path", ln_options.path, "direct|char|both")
        ->check(CLI::IsMember({"direct", "char", "both"}));
    int ln_m_max = 0, ln_k_max = 0;
    ln->add_option("--m-max", ln_m_max, "Override characterization sweep bound");
    ln->add_option("--k-max", ln_k_max, "Override direct-path list size bound");
    add_caps_flags(ln, ln_options.caps);

    // family
    cli::FamilyOptions fam_options;
    int fam_b = -1;
    auto* fam = app.add_subcommand("family", "Emit a named graph family member");
    fam->add_option("name", fam_options.family,
                    "friendship|book|path|cycle|complete|complete_bipartite|star")
        ->required();
    fam->add_option("n", fam_options.a, "Family size parameter")->required();
    fam->add_option("m", fam_b, "Second size parameter (complete_bipartite)");
    fam->add_option("--format", fam_options.format, "graph6|edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    // verify-props
    cli::VerifyOptions verify_options;
    auto* verify =
        app.add_subcommand("verify-props", "Run the randomized/exhaustive property suites");
    verify->add_option("--suite", verify_options.suite,
                       "all|counting|labeling|friendship|book|listnum");
    verify->add_option("--seed", verify_options.seed, "Suite seed");
    verify->add_option("--count", verify_options.count,
                       "Instances/trials per suite (0 = default)");
    verify->add_flag("-v,--verbose", verify_options.verbose, "Per-suite lines on stderr");
    add_caps_flags(verify, verify_options.caps);

    // hunt
    cli::HuntOptions hunt_options;
    InputArg hunt_input;
    std::string hunt_pred = "dist";
    int hunt_k = 0;
    auto* hunt = app.add_subcommand(
        "hunt", "Scan graph6 lines for list assignments defeating the base invariant");
    hunt->add_option("input", hunt_input.path, "Input file or - for stdin");
    hunt->add_option("--pred", hunt_pred, "dist|proper|propdist")
        ->check(CLI::IsMember({"dist", "proper", "propdist"}));
    hunt->add_option("--k", hunt_k, "Fixed list size (default: per-graph base invariant)");
    add_caps_flags(hunt, hunt_options.caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitUsage;
    }

    try {
        if (inv->parsed()) {
            if (inv_m_max > 0) inv_options.m_max = inv_m_max;
            if (inv_k_max > 0) inv_options.k_max = inv_k_max;
            return inv_input.with_stream([&](std::istream& in) {
                return cli::run_invariants(in, std::cout, std::cerr, inv_options);
            });
        }
        if (ln->parsed()) {
            ln_options.pred = predicate_from_string(ln_pred);
            if (ln_m_max > 0) ln_options.m_max = ln_m_max;
            if (ln_k_max > 0) ln_options.k_max = ln_k_max;
            return ln_input.with_stream([&](std::istream& in) {
                return cli::run_listnum(in, std::cout, std::cerr, ln_options);
            });
        }
        if (fam->parsed()) {
            if (fam_b >= 0) fam_options.b = fam_b;
            return cli::run_family(std::cout, std::cerr, fam_options);
        }
        if (verify->parsed()) {
            return cli::run_verify(std::cout, std::cerr, verify_options);
        }
        if (hunt->parsed()) {
            hunt_options.pred = predicate_from_string(hunt_pred);
            if (hunt_k > 0) hunt_options.fixed_k = hunt_k;
            return hunt_input.with_stream([&](std::istream& in) {
                return cli::run_hunt(in, std::cout, std::cerr, hunt_options);
            });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitVerifyFailure;
    }
    return cli::kExitUsage;
}
