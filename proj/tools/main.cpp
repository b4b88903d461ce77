// Batch CLI: every command prints one deterministic JSON report to stdout and
// a human-readable summary (with timing) to stderr.
//
// Exit codes: 0 verified/passed, 1 falsified, 2 usage or internal error.

#include "jordangh/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

int emit(const jordangh::CommandResult& result, const std::optional<std::string>& output_path,
         std::chrono::steady_clock::time_point start) {
    const std::string text = result.report.dump(2) + "\n";
    std::cout << text;
    if (output_path) {
        std::ofstream out(*output_path);
        if (!out) {
            std::cerr << "error: cannot write " << *output_path << "\n";
            return 2;
        }
        out << text;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << result.summary << " [" << elapsed.count() << " ms]\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solution spaces of derivation-triple conditions on matrix algebras"};
    app.require_subcommand(1);

    std::string algebra_spec = "tn:2";
    std::string field_spec = "Q";
    std::string mode_spec = "jordan";
    std::size_t n = 2;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::optional<std::string> golden_path;
    std::optional<std::string> output_path;

    CLI::App* solve = app.add_subcommand("solve", "Compute one solution space");
    solve->add_option("--algebra", algebra_spec, "Algebra spec: tn:<n> or mn:<n>")->required();
    solve->add_option("--field", field_spec, "Field spec: Q or Fp:<p>")->required();
    solve->add_option("--mode", mode_spec, "gh, jordan, or jordan-corner")->required();
    solve->add_option("--golden", golden_path, "Fail on drift against this golden file");
    solve->add_option("--output", output_path, "Also write the JSON report here");

    CLI::App* thm1 = app.add_subcommand(
        "verify-theorem1", "Corner-assumption Jordan space equals gh space on T_n");
    thm1->add_option("--n", n, "Matrix size, n >= 2")->required();
    thm1->add_option("--field", field_spec, "Field spec: Q or Fp:<p>")->required();
    thm1->add_option("--golden", golden_path, "Fail on drift against this golden file");
    thm1->add_option("--output", output_path, "Also write the JSON report here");

    CLI::App* thm2 =
        app.add_subcommand("verify-theorem2", "Jordan space equals gh space on M_n");
    thm2->add_option("--n", n, "Matrix size, n >= 2")->required();
    thm2->add_option("--field", field_spec, "Field spec: Q or Fp:<p>")->required();
    thm2->add_option("--golden", golden_path, "Fail on drift against this golden file");
    thm2->add_option("--output", output_path, "Also write the JSON report here");

    CLI::App* cex = app.add_subcommand(
        "counterexample", "Reproduce the T_2 Jordan-but-not-gh triple and its reports");
    cex->add_option("--field", field_spec, "Field spec: Q or Fp:<p>")->required();
    cex->add_option("--trials", trials, "Random pairs per checker (default 100)");
    cex->add_option("--seed", seed, "64-bit sampling seed (default 0)");
    cex->add_option("--output", output_path, "Also write the JSON report here");

    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "Cross-validate solver, dense oracle, and checkers on one algebra");
    oracle->add_option("--algebra", algebra_spec, "Algebra spec: tn:<n> or mn:<n>")->required();
    oracle->add_option("--field", field_spec, "Field spec: Q or Fp:<p>")->required();
    oracle->add_option("--trials", trials, "Random trials per check (default 100)");
    oracle->add_option("--seed", seed, "64-bit sampling seed (default 0)");
    oracle->add_option("--output", output_path, "Also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage/error text
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        jordangh::CommandResult result;
        if (solve->parsed()) {
            result = jordangh::run_solve(algebra_spec, field_spec, mode_spec, golden_path);
        } else if (thm1->parsed()) {
            result = jordangh::run_verify_theorem1(n, field_spec, golden_path);
        } else if (thm2->parsed()) {
            result = jordangh::run_verify_theorem2(n, field_spec, golden_path);
        } else if (cex->parsed()) {
            result = jordangh::run_counterexample(field_spec, trials, seed);
        } else {
            result = jordangh::run_oracle_check(algebra_spec, field_spec, trials, seed);
        }
        return emit(result, output_path, start);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
