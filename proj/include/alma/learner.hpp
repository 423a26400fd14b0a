#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

#include "alma/m2ma.hpp"
#include "alma/minimize.hpp"
#include "alma/oracle.hpp"

namespace alma {

/// Memoizing wrapper; counts the queries that reach the wrapped oracle.
class CachingOracle final : public MembershipOracle {
public:
    explicit CachingOracle(MembershipOracle& inner) : inner_(inner) {}

    [[nodiscard]] const Alphabet& alphabet() const override { return inner_.alphabet(); }
    [[nodiscard]] bool isLasso() const override { return inner_.isLasso(); }
    [[nodiscard]] bool query(const Word& w) override;

    [[nodiscard]] std::size_t queries() const { return misses_; }

private:
    MembershipOracle& inner_;
    std::unordered_map<Word, bool, WordHash> cache_;
    std::size_t misses_ = 0;
};

struct LearnerState {
    ObservationTable table;  // block is t x t and invertible, the empty word is always a suffix
    M2ma hypothesis;
    std::size_t eqCount = 0;
    std::size_t mqCount = 0;
    std::size_t counterexamples = 0;

    [[nodiscard]] std::size_t size() const { return table.prefixes.size(); }
};

/// The all-rejecting dimension-1 hypothesis over an empty table.
[[nodiscard]] LearnerState initialState(const Alphabet& alphabet);

/**
 * Hypothesis of dimension t = |prefixes| read off an invertible table:
 * the initial vector solves g*F = (f(y_1) .. f(y_t)), row i of mu_s solves
 * r*F = (f(x_i s y_1) .. f(x_i s y_t)), and the final vector holds f(x_i).
 * An empty table gives the dimension-1 zero automaton.
 */
[[nodiscard]] M2ma buildHypothesis(const ObservationTable& table, MembershipOracle& mq);

/**
 * Grows the table by one row and one column from a counterexample z.
 *
 * The first counterexample on an empty table sets X = {z}, Y = {eps}.
 * Otherwise the shortest prefix w.s of z is found whose simulated row
 * disagrees with f on some suffix y, and w, s.y are added. The hypothesis
 * is rebuilt before returning.
 */
void processCounterexample(LearnerState& state, const Word& z, MembershipOracle& mq);

/// First table word x.y (row-major) on which the hypothesis disagrees with the table.
[[nodiscard]] std::optional<Word> findTableInconsistency(const LearnerState& state);

struct LearnOptions {
    std::optional<std::size_t> maxEq;
    /// Called after every equivalence query, before the counterexample is used.
    std::function<void(const LearnerState&)> onEquivalenceQuery;
};

struct LearnResult {
    M2ma hypothesis;
    LearnerState state;
    bool converged = false;
};

/**
 * The exact-learning loop: build a hypothesis, ask an equivalence query,
 * refine on counterexamples. Before each equivalence query the table's own
 * words are checked against the hypothesis and any disagreement is used as
 * an internal counterexample, so every submitted hypothesis agrees with
 * the oracle on the whole table.
 */
[[nodiscard]] LearnResult learn(MembershipOracle& mq, EquivalenceStrategy& eq, const LearnOptions& options = {});

/**
 * Equivalence against a minimized target using its observation table:
 * tests every x.y and x.s.y. Exact for hypotheses whose dimension does not
 * exceed the target's, which includes every hypothesis the learner builds.
 */
class TableEquivalence final : public EquivalenceStrategy {
public:
    TableEquivalence(M2ma target, ObservationTable table);
    [[nodiscard]] std::optional<Word> check(const M2ma& hypothesis) override;

private:
    M2ma target_;
    ObservationTable table_;
};

/// Exact equivalence through the direct-sum construction. Mostly useful in tests.
class ExactEquivalence final : public EquivalenceStrategy {
public:
    explicit ExactEquivalence(M2ma target) : target_(std::move(target)) {}
    [[nodiscard]] std::optional<Word> check(const M2ma& hypothesis) override {
        return findCounterexample(hypothesis, target_);
    }

private:
    M2ma target_;
};

[[nodiscard]] std::string printTable(const LearnerState& state);

}  // namespace alma
