#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "alma/m2ma.hpp"

namespace alma {

enum class Subcommand { M2ma, Suba, Minimize, Nba, Arbitrary };

[[nodiscard]] std::optional<Subcommand> parseSubcommand(const std::string& name);
[[nodiscard]] const char* toString(Subcommand sub);

struct RunSpec {
    Subcommand subcommand = Subcommand::M2ma;
    std::string inputPath;
    bool verbose = false;        // -v: observation table after each equivalence query
    bool showMinimization = false;  // -m
    bool dimensionOnly = false;  // -d
    bool dfaCount = false;       // -a
    std::optional<std::uint64_t> seed;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInternalError = 2;
inline constexpr int kUnconverged = 3;
}  // namespace exit_code

/// --seed, then ALMA_SEED, then 1.
[[nodiscard]] std::uint64_t resolveSeed(const std::optional<std::uint64_t>& flag);

struct PipelineResult {
    M2ma automaton;   // the printed automaton, initial vector e1
    bool isOmega = false;
    int exitCode = exit_code::kOk;
};

/**
 * Runs one subcommand's pipeline: statistics as `#` comments and the
 * automaton go to out, progress, tables and warnings to err. Throws
 * InputError, OracleError or InvariantError on failure.
 */
[[nodiscard]] PipelineResult runPipeline(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Reads one word per line from in and answers accepted/rejected until `quit` or end of input.
void queryPrompt(const M2ma& learned, bool isOmega, std::istream& in, std::ostream& out, std::ostream& err,
                 bool interactive = false);

/// runPipeline plus the query prompt, with errors mapped to exit codes.
[[nodiscard]] int runSubcommand(const RunSpec& spec, std::istream& in, std::ostream& out, std::ostream& err,
                                bool interactive = false);

}  // namespace alma
