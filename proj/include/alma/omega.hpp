#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "alma/m2ma.hpp"
#include "alma/word.hpp"

namespace alma {

enum class AutomatonKind { Nba, Suba, Ufa };

[[nodiscard]] const char* toString(AutomatonKind kind);

struct Transition {
    std::size_t from;
    Symbol symbol;
    std::size_t to;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/**
 * State-set automaton shared by NBAs, SUBAs and UFAs. States are 0-based
 * here; the file format numbers them from 1.
 */
class Nfa {
public:
    Nfa(Alphabet alphabet, std::size_t stateCount, std::vector<std::size_t> initial,
        std::vector<Transition> transitions, std::vector<std::size_t> final, AutomatonKind kind);

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t stateCount() const { return stateCount_; }
    [[nodiscard]] AutomatonKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<std::size_t>& initial() const { return initial_; }
    [[nodiscard]] const std::vector<std::size_t>& final() const { return final_; }
    [[nodiscard]] const std::vector<Transition>& transitions() const { return transitions_; }
    [[nodiscard]] bool isFinal(std::size_t q) const { return finalMask_[q]; }
    [[nodiscard]] std::span<const std::size_t> successors(std::size_t q, Symbol s) const {
        return successors_[q * alphabet_.size() + s];
    }

private:
    Alphabet alphabet_;
    std::size_t stateCount_;
    std::vector<std::size_t> initial_;
    std::vector<Transition> transitions_;  // sorted, unique
    std::vector<std::size_t> final_;
    std::vector<bool> finalMask_;
    std::vector<std::vector<std::size_t>> successors_;
    AutomatonKind kind_;
};

/// The ultimately periodic word prefix . period^omega. The period must be nonempty.
struct LassoWord {
    Word prefix;
    Word period;

    friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

/// prefix $ period, with `separator` the index of `$`.
[[nodiscard]] Word encodeLasso(const LassoWord& lasso, Symbol separator);
/// Inverse of encodeLasso; nullopt unless w has exactly one `$` followed by a nonempty period.
[[nodiscard]] std::optional<LassoWord> decodeLasso(const Word& w, Symbol separator);

/**
 * UFA over alphabet + `$` accepting u$v iff the SUBA accepts u(v)^omega.
 *
 * States 0..n-1 read u with the SUBA's transitions; the 2n^2 states
 * (p, q, b) read v, where p is the state the period started in, q the
 * current state and b whether a final state has been entered. Reading `$`
 * from q enters (q, q, 0); (p, p, 1) is accepting. Always 2n^2 + n states.
 */
[[nodiscard]] Nfa subaToUfa(const Nfa& suba);

/// Index of the period state (p, q, b) in the output of subaToUfa.
[[nodiscard]] std::size_t ufaPeriodState(std::size_t n, std::size_t p, std::size_t q, bool sawFinal);

/// Characteristic vectors and adjacency matrices; f(w) is the parity of accepting runs.
[[nodiscard]] M2ma ufaToM2ma(const Nfa& ufa);

/// Membership for SUBAs: some q reached on u has a v-loop through a final state.
[[nodiscard]] bool subaMq(const Nfa& suba, const LassoWord& w);

/**
 * Membership of u(v)^omega for an arbitrary Buchi automaton. Collects the
 * states reachable on u followed by any number of v's, then looks for one
 * with a loop over a positive number of v's that enters a final state
 * (tracked as a bit alongside the state). Runs in O(n^3 m l).
 */
[[nodiscard]] bool nbaMq(const Nfa& nba, const LassoWord& w);

/// A word of length <= maxLen with at least two accepting runs, if any.
[[nodiscard]] std::optional<Word> checkUnambiguous(const Nfa& nfa, std::size_t maxLen);

}  // namespace alma
