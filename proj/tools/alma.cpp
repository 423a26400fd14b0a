#include <unistd.h>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "alma/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Learn and minimize modulo-2 multiplicity automata"};
    app.set_version_flag("--version", "alma 0.1.0");

    std::string subcommand;
    alma::RunSpec spec;
    std::uint64_t seed = 0;
    app.add_option("mode", subcommand, "m2ma, suba, minimize, nba or arbitrary")
        ->required()
        ->check(CLI::IsMember({"m2ma", "suba", "minimize", "nba", "arbitrary"}));
    app.add_option("input", spec.inputPath, "input file")->required();
    app.add_flag("-v", spec.verbose, "print the observation table after each equivalence query");
    app.add_flag("-m", spec.showMinimization, "print minimization progress");
    app.add_flag("-d", spec.dimensionOnly, "minimize on SUBA input: print only the dimension");
    app.add_flag("-a", spec.dfaCount, "also print the number of states of the minimal DFA");
    auto* seedOpt = app.add_option("--seed", seed, "random seed (default: ALMA_SEED, then 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : alma::exit_code::kInputError;
    }
    spec.subcommand = *alma::parseSubcommand(subcommand);
    if (seedOpt->count() > 0) spec.seed = seed;

    std::ios::sync_with_stdio(false);
    return alma::runSubcommand(spec, std::cin, std::cout, std::cerr, ::isatty(STDIN_FILENO) != 0);
}
