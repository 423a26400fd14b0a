#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "alma/m2ma.hpp"
#include "alma/omega.hpp"
#include "alma/oracle.hpp"

namespace alma {

/// The single random source threaded through sampling.
using Rng = std::mt19937_64;

/// Length uniform over 0..maxLen, then each symbol uniform.
[[nodiscard]] Word randomWord(std::size_t alphabetSize, std::size_t maxLen, Rng& rng);

/**
 * A lasso whose encoding u$v has length at most maxLen: |u|+|v| is uniform
 * over 1..maxLen-1 and |v| uniform over 1..|u|+|v|.
 */
[[nodiscard]] LassoWord randomLasso(std::size_t alphabetSize, std::size_t maxLen, Rng& rng);

struct ApproxEqConfig {
    std::size_t numTests = 0;
    std::size_t maxLen = 0;
    std::size_t maxEq = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ValidationConfig {
    std::size_t sampleCount = 1000;
    std::size_t sampleMaxLen = 25;
    std::uint64_t seed = 0;
};

/// Draws a sample word suited to the oracle: a finite word, or an encoded lasso.
[[nodiscard]] Word sampleWord(const MembershipOracle& oracle, std::size_t maxLen, Rng& rng);

/**
 * Lasso targets over the learning alphabet base + `$`. Words that are not
 * of the form u$v with nonempty v are outside L$ and rejected.
 */
class LassoOracle : public MembershipOracle {
public:
    explicit LassoOracle(const Alphabet& base);

    [[nodiscard]] const Alphabet& alphabet() const final { return alphabet_; }
    [[nodiscard]] bool isLasso() const final { return true; }
    [[nodiscard]] bool query(const Word& w) final;
    [[nodiscard]] virtual bool queryLasso(const LassoWord& w) = 0;
    [[nodiscard]] Symbol separator() const { return separator_; }

private:
    Alphabet alphabet_;
    Symbol separator_;
};

class SubaOracle final : public LassoOracle {
public:
    explicit SubaOracle(Nfa suba);
    [[nodiscard]] bool queryLasso(const LassoWord& w) override { return subaMq(suba_, w); }

private:
    Nfa suba_;
};

class NbaOracle final : public LassoOracle {
public:
    explicit NbaOracle(Nfa nba);
    [[nodiscard]] bool queryLasso(const LassoWord& w) override { return nbaMq(nba_, w); }

private:
    Nfa nba_;
};

/// Finite-word oracle backed by a callable.
class FunctionOracle final : public MembershipOracle {
public:
    FunctionOracle(Alphabet alphabet, std::function<bool(const Word&)> fn)
        : alphabet_(std::move(alphabet)), fn_(std::move(fn)) {}
    [[nodiscard]] const Alphabet& alphabet() const override { return alphabet_; }
    [[nodiscard]] bool query(const Word& w) override { return fn_(w); }

private:
    Alphabet alphabet_;
    std::function<bool(const Word&)> fn_;
};

struct ExternalOracleSpec {
    Alphabet alphabet;  // input symbols, without `$`
    std::string command;
    bool lasso = false;
    std::chrono::milliseconds timeout{10'000};
    std::string workingDirectory;  // empty: inherit
};

/**
 * Membership answered by a child process over its standard streams.
 *
 * One word per line: symbols separated by single spaces, `_` for the empty
 * word, lassos as `u $ v`. The child answers `0` or `1` on its own line and
 * receives `quit` when the oracle is destroyed. Answers are cached.
 */
class ExternalOracle final : public MembershipOracle {
public:
    explicit ExternalOracle(ExternalOracleSpec spec);
    ~ExternalOracle() override;
    ExternalOracle(const ExternalOracle&) = delete;
    ExternalOracle& operator=(const ExternalOracle&) = delete;

    [[nodiscard]] const Alphabet& alphabet() const override { return alphabet_; }
    [[nodiscard]] bool isLasso() const override { return spec_.lasso; }
    [[nodiscard]] bool query(const Word& w) override;
    /// Queries that reached the process.
    [[nodiscard]] std::size_t processQueries() const { return sent_; }

private:
    void start();
    void stop() noexcept;
    bool ask(const std::string& line);

    ExternalOracleSpec spec_;
    Alphabet alphabet_;
    std::unordered_map<Word, bool, WordHash> cache_;
    std::size_t sent_ = 0;
    int pid_ = -1;
    int toChild_ = -1;
    int fromChild_ = -1;
    std::string pending_;
};

/**
 * Random-sampling stand-in for an equivalence oracle: draws numTests words
 * of length at most maxLen and returns the first the hypothesis gets wrong.
 * The maxEq budget is enforced by the learning loop.
 */
class ApproxEquivalence final : public EquivalenceStrategy {
public:
    ApproxEquivalence(MembershipOracle& target, ApproxEqConfig config, Rng& rng)
        : target_(target), config_(config), rng_(rng) {}
    [[nodiscard]] std::optional<Word> check(const M2ma& hypothesis) override;

private:
    MembershipOracle& target_;
    ApproxEqConfig config_;
    Rng& rng_;
};

struct ValidationReport {
    std::uint64_t seed = 0;
    std::size_t sampleCount = 0;
    std::size_t sampleMaxLen = 0;
    std::size_t agreements = 0;
    std::vector<Word> witnesses;  // at most 10 disagreements

    [[nodiscard]] bool passed() const { return agreements == sampleCount; }
    [[nodiscard]] std::string summary(const Alphabet& alphabet) const;
};

/// Compares learned against reference on a random sample (lassos for omega references).
[[nodiscard]] ValidationReport validateLearned(const M2ma& learned, MembershipOracle& reference,
                                               const ValidationConfig& config);

}  // namespace alma
