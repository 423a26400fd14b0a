#include "alma/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <istream>
#include <ostream>
#include <sstream>

#include "alma/errors.hpp"
#include "alma/io.hpp"
#include "alma/learner.hpp"
#include "alma/minimize.hpp"
#include "alma/omega.hpp"
#include "alma/oracles.hpp"

namespace alma {

std::optional<Subcommand> parseSubcommand(const std::string& name) {
    if (name == "m2ma") return Subcommand::M2ma;
    if (name == "suba") return Subcommand::Suba;
    if (name == "minimize") return Subcommand::Minimize;
    if (name == "nba") return Subcommand::Nba;
    if (name == "arbitrary") return Subcommand::Arbitrary;
    return std::nullopt;
}

const char* toString(Subcommand sub) {
    switch (sub) {
        case Subcommand::M2ma: return "m2ma";
        case Subcommand::Suba: return "suba";
        case Subcommand::Minimize: return "minimize";
        case Subcommand::Nba: return "nba";
        case Subcommand::Arbitrary: return "arbitrary";
    }
    return "?";
}

std::uint64_t resolveSeed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ALMA_SEED"); env && *env) {
        std::string_view text(env);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw InputError("ALMA_SEED must be a non-negative integer, got '" + std::string(text) + "'");
        }
        return seed;
    }
    return 1;
}

namespace {

struct Context {
    const RunSpec& spec;
    std::ostream& out;
    std::ostream& err;
    std::uint64_t seed;
};

ProgressSink minimizeProgress(const Context& ctx, const Alphabet& alphabet) {
    if (!ctx.spec.showMinimization) return {};
    return [&ctx, &alphabet](const ProgressEvent& e) {
        auto& err = ctx.err;
        switch (e.stage) {
            case MinimizeStage::Input:
                err << "[minimize] input dimension " << e.size << '\n';
                break;
            case MinimizeStage::ForwardBasis:
                err << "[minimize] forward reduction: dimension " << e.size << '\n';
                break;
            case MinimizeStage::BackwardBasis:
                err << "[minimize] backward reduction: dimension " << e.size << '\n';
                break;
            case MinimizeStage::TableComplete:
                err << "[minimize] observation table " << e.size << 'x' << e.size << '\n';
                if (e.table) err << renderTable(*e.table, alphabet);
                break;
        }
    };
}

LearnOptions learnOptions(const Context& ctx, std::optional<std::size_t> maxEq) {
    LearnOptions opts;
    opts.maxEq = maxEq;
    if (ctx.spec.verbose) {
        opts.onEquivalenceQuery = [&ctx](const LearnerState& s) {
            ctx.err << "[learn] equivalence query " << s.eqCount << ", hypothesis dimension "
                    << s.hypothesis.dimension() << '\n'
                    << printTable(s);
        };
    }
    return opts;
}

void printDfaCount(const Context& ctx, const M2ma& a) {
    if (!ctx.spec.dfaCount) return;
    try {
        ctx.out << "# minimal DFA states: " << minimalDfaStateCount(a) << '\n';
    } catch (const StateCapExceeded& e) {
        ctx.err << "warning: " << e.what() << "; minimal DFA state count skipped\n";
    }
}

void printAutomaton(const Context& ctx, const M2ma& a) {
    ctx.out << "# initial vector is e1\n" << formatM2ma(a);
}

ValidationReport validate(const Context& ctx, const M2ma& result, MembershipOracle& reference) {
    ValidationConfig config;
    config.seed = ctx.seed;
    return validateLearned(result, reference, config);
}

void requireValid(const ValidationReport& report, const Alphabet& alphabet) {
    if (!report.passed()) throw InvariantError(report.summary(alphabet));
}

/// Minimize, learn against the table oracle, cross-check and print.
M2ma exactPipeline(const Context& ctx, const M2ma& target, MembershipOracle& reference) {
    const auto& alphabet = target.alphabet();
    auto min = minimize(target, minimizeProgress(ctx, alphabet));
    M2maOracle mq(min.automaton);
    TableEquivalence eq(min.automaton, min.table);
    auto result = learn(mq, eq, learnOptions(ctx, std::nullopt));
    if (!result.converged) throw InvariantError("exact learning did not converge");
    auto learned = forwardReduce(result.hypothesis).automaton;
    if (learned.dimension() != min.automaton.dimension()) {
        throw InvariantError("learned dimension " + std::to_string(learned.dimension()) +
                             " differs from minimized dimension " + std::to_string(min.automaton.dimension()));
    }
    if (!equivalent(learned, min.automaton)) throw InvariantError("learned automaton differs from the minimized one");
    auto report = validate(ctx, learned, reference);
    requireValid(report, alphabet);

    ctx.out << "# unminimized dimension: " << target.dimension() << '\n'
            << "# minimized dimension: " << min.automaton.dimension() << '\n'
            << "# learned dimension: " << learned.dimension() << '\n'
            << "# equivalence queries: " << result.state.eqCount << '\n'
            << "# membership queries: " << result.state.mqCount << '\n'
            << "# " << report.summary(alphabet) << '\n';
    printDfaCount(ctx, learned);
    printAutomaton(ctx, learned);
    return learned;
}

PipelineResult runM2ma(const Context& ctx, const std::string& text) {
    auto target = parseM2maFile(text);
    M2maOracle reference(target);
    return {exactPipeline(ctx, target, reference), false, exit_code::kOk};
}

M2ma subaToM2ma(const Context& ctx, const Nfa& suba) {
    auto ufa = subaToUfa(suba);
    ctx.out << "# SUBA states: " << suba.stateCount() << '\n' << "# UFA states: " << ufa.stateCount() << '\n';
    return ufaToM2ma(ufa);
}

PipelineResult runSuba(const Context& ctx, const std::string& text) {
    auto file = parseNfaFile(text, AutomatonKind::Suba);
    auto target = subaToM2ma(ctx, file.automaton);
    SubaOracle reference(file.automaton);
    return {exactPipeline(ctx, target, reference), true, exit_code::kOk};
}

PipelineResult runMinimize(const Context& ctx, const std::string& text) {
    const bool suba = detectInputKind(text) == InputKind::Nfa;
    if (ctx.spec.dimensionOnly && !suba) throw InputError("-d applies only to SUBA input");

    std::optional<Nfa> automaton;
    if (suba) automaton = parseNfaFile(text, AutomatonKind::Suba).automaton;
    // SUBA statistics are held back so that -d prints the dimension alone.
    std::ostringstream header;
    const Context held{ctx.spec, header, ctx.err, ctx.seed};
    const M2ma target = suba ? subaToM2ma(held, *automaton) : parseM2maFile(text);
    auto min = minimize(target, minimizeProgress(ctx, target.alphabet()));

    ValidationReport report;
    if (suba) {
        SubaOracle reference(*automaton);
        report = validate(ctx, min.automaton, reference);
    } else {
        M2maOracle reference(target);
        report = validate(ctx, min.automaton, reference);
    }
    requireValid(report, target.alphabet());

    if (ctx.spec.dimensionOnly) {
        ctx.out << min.automaton.dimension() << '\n';
        return {min.automaton, true, exit_code::kOk};
    }
    ctx.out << header.str() << "# unminimized dimension: " << target.dimension() << '\n'
            << "# minimized dimension: " << min.automaton.dimension() << '\n'
            << "# " << report.summary(target.alphabet()) << '\n';
    printDfaCount(ctx, min.automaton);
    printAutomaton(ctx, min.automaton);
    return {min.automaton, suba, exit_code::kOk};
}

/// Learning with sampled equivalence queries; never fatal on a poor result.
PipelineResult approximatePipeline(const Context& ctx, MembershipOracle& target, const ApproxEqConfig& config) {
    config.validate();
    Rng rng(ctx.seed);
    ApproxEquivalence eq(target, config, rng);
    auto result = learn(target, eq, learnOptions(ctx, config.maxEq));
    auto learned = forwardReduce(result.hypothesis).automaton;
    auto report = validate(ctx, learned, target);

    int code = exit_code::kOk;
    if (!result.converged) {
        ctx.err << "warning: no hypothesis passed sampling within " << config.maxEq
                << " equivalence queries; printing the last one\n";
        code = exit_code::kUnconverged;
    }
    if (!report.passed()) {
        ctx.err << "warning: " << report.summary(target.alphabet()) << '\n';
        code = exit_code::kUnconverged;
    }

    auto brief = report;
    brief.witnesses.clear();
    ctx.out << "# learned dimension: " << learned.dimension() << '\n'
            << "# equivalence queries: " << result.state.eqCount << '\n'
            << "# membership queries: " << result.state.mqCount << '\n'
            << "# converged: " << (result.converged ? "yes" : "no") << '\n'
            << "# " << brief.summary(target.alphabet()) << '\n';
    printDfaCount(ctx, learned);
    printAutomaton(ctx, learned);
    return {learned, target.isLasso(), code};
}

PipelineResult runNba(const Context& ctx, const std::string& text) {
    auto file = parseNfaFile(text, AutomatonKind::Nba);
    ctx.out << "# NBA states: " << file.automaton.stateCount() << '\n';
    NbaOracle target(file.automaton);
    return approximatePipeline(ctx, target, *file.eq);
}

PipelineResult runArbitrary(const Context& ctx, const std::string& text) {
    auto file = parseArbitraryFile(text);
    // Relative paths in the command resolve against the input file's directory.
    ExternalOracleSpec oracle;
    oracle.alphabet = file.alphabet;
    oracle.command = file.command;
    oracle.lasso = file.lasso;
    oracle.workingDirectory = std::filesystem::absolute(ctx.spec.inputPath).parent_path().string();
    ExternalOracle target(oracle);
    return approximatePipeline(ctx, target, file.eq);
}

}  // namespace

PipelineResult runPipeline(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.dimensionOnly && spec.subcommand != Subcommand::Minimize) {
        throw InputError("-d is only valid with the minimize subcommand");
    }
    const Context ctx{spec, out, err, resolveSeed(spec.seed)};
    const auto text = readTextFile(spec.inputPath);
    switch (spec.subcommand) {
        case Subcommand::M2ma: return runM2ma(ctx, text);
        case Subcommand::Suba: return runSuba(ctx, text);
        case Subcommand::Minimize: return runMinimize(ctx, text);
        case Subcommand::Nba: return runNba(ctx, text);
        case Subcommand::Arbitrary: return runArbitrary(ctx, text);
    }
    throw InvariantError("unknown subcommand");
}

void queryPrompt(const M2ma& learned, bool isOmega, std::istream& in, std::ostream& out, std::ostream& err,
                 bool interactive) {
    const auto& alphabet = learned.alphabet();
    const auto separator = alphabet.separator();
    if (interactive) {
        err << (isOmega ? "enter lassos as 'u $ v'" : "enter words as space-separated symbols")
            << " ('_' is the empty word, 'quit' exits)\n";
    }
    std::string line;
    while (true) {
        if (interactive) err << "> " << std::flush;
        if (!std::getline(in, line)) break;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const auto text = line.substr(first, last - first + 1);
        if (text == "quit") break;
        try {
            auto w = alphabet.parseWord(text);
            if (isOmega && (!separator || !decodeLasso(w, *separator))) {
                err << "error: expected a lasso 'u $ v' with one '$' and a nonempty v\n";
                continue;
            }
            out << (learned.accepts(w) ? "accepted" : "rejected") << std::endl;
        } catch (const InputError& e) {
            err << "error: " << e.what() << '\n';
        }
    }
}

int runSubcommand(const RunSpec& spec, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
    try {
        auto result = runPipeline(spec, out, err);
        out.flush();
        if (!spec.dimensionOnly) queryPrompt(result.automaton, result.isOmega, in, out, err, interactive);
        return result.exitCode;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kInputError;
    } catch (const OracleError& e) {
        err << "oracle error: " << e.what() << '\n';
        return exit_code::kInputError;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::kInternalError;
    }
}

}  // namespace alma
