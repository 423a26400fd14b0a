#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alma/errors.hpp"
#include "alma/gf2.hpp"
#include "alma/word.hpp"

namespace alma {

/**
 * A modulo-2 multiplicity automaton (alphabet, v_I, {mu_s}, v_F).
 *
 * States are row vectors; reading word w from the initial state yields
 * v_I^T mu(w), and w is accepted iff v_I^T mu(w) v_F == 1 over GF(2).
 * mu(empty word) is the identity.
 */
class M2ma {
public:
    M2ma(Alphabet alphabet, Gf2Vector initial, std::vector<Gf2Matrix> transitions, Gf2Vector final);

    /// Canonical empty-language automaton: dimension 1, v_I = (1), all-zero mu and v_F.
    static M2ma emptyLanguage(Alphabet alphabet);

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t dimension() const { return initial_.size(); }
    [[nodiscard]] const Gf2Vector& initial() const { return initial_; }
    [[nodiscard]] const Gf2Vector& final() const { return final_; }
    [[nodiscard]] const Gf2Matrix& transition(Symbol s) const { return transitions_.at(s); }
    [[nodiscard]] const std::vector<Gf2Matrix>& transitions() const { return transitions_; }

    /// v_I^T mu(w).
    [[nodiscard]] Gf2Vector stateAfter(const Word& w) const;
    /// mu(w) v_F.
    [[nodiscard]] Gf2Vector costateOf(const Word& w) const;
    /// Acceptance bit f(w). Rejects symbols outside the alphabet with their position.
    [[nodiscard]] bool accepts(const Word& w) const;

    /// Swaps v_I and v_F and transposes every mu_s, so f_rev(w) == f(reverse(w)).
    [[nodiscard]] M2ma reversed() const;

    friend bool operator==(const M2ma&, const M2ma&) = default;

private:
    void checkWord(const Word& w) const;

    Alphabet alphabet_;
    Gf2Vector initial_;
    std::vector<Gf2Matrix> transitions_;
    Gf2Vector final_;
};

[[nodiscard]] inline bool membership(const M2ma& a, const Word& w) { return a.accepts(w); }

/**
 * Exact equivalence via the direct sum of a and b, whose function is
 * f_a XOR f_b. Returns a word on which they differ, or nullopt when equal.
 * The counterexample is the first violating basis label in breadth-first
 * discovery order, hence of minimal length among the labels.
 */
[[nodiscard]] std::optional<Word> findCounterexample(const M2ma& a, const M2ma& b);
[[nodiscard]] inline bool equivalent(const M2ma& a, const M2ma& b) {
    return !findCounterexample(a, b).has_value();
}

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

class StateCapExceeded : public InputError {
public:
    StateCapExceeded(std::size_t found, std::size_t cap);
    [[nodiscard]] std::size_t found() const { return found_; }

private:
    std::size_t found_;
};

/// Deterministic automaton over the reachable state vectors of an M2MA.
struct ReachableDfa {
    std::vector<Gf2Vector> states;  // discovery order; states[0] is the initial state
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> next;  // next[state][symbol]
    std::vector<bool> accepting;

    [[nodiscard]] std::size_t size() const { return states.size(); }
    [[nodiscard]] bool accepts(const Word& w) const;
};

/// Breadth-first closure of v_I^T under all mu_s. Throws StateCapExceeded past stateCap states.
[[nodiscard]] ReachableDfa toReachableDfa(const M2ma& a, std::size_t stateCap = kDefaultStateCap);

/// Number of Myhill-Nerode classes of a total DFA (Moore partition refinement).
[[nodiscard]] std::size_t minimalStateCount(const ReachableDfa& dfa);
[[nodiscard]] std::size_t minimalDfaStateCount(const M2ma& a, std::size_t stateCap = kDefaultStateCap);

}  // namespace alma
