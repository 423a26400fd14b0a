#pragma once

#include "alma/m2ma.hpp"
#include "alma/omega.hpp"

namespace alma::fixtures {

inline Alphabet ab() { return Alphabet({"a", "b"}); }

/// Three-state automaton whose reachable DFA has six states.
inline M2ma exampleM() {
    return M2ma(ab(), Gf2Vector::fromString("100"),
                {Gf2Matrix::fromRows({{0, 0, 1}, {1, 0, 0}, {1, 1, 1}}),
                 Gf2Matrix::fromRows({{0, 1, 0}, {1, 0, 1}, {1, 1, 0}})},
                Gf2Vector::fromString("110"));
}

// Omega automata below use 0-based states; state 0 is initial.

/// a^omega.
inline Nfa aOmega() {
    return Nfa(Alphabet({"a"}), 1, {0}, {{0, 0, 0}}, {0}, AutomatonKind::Suba);
}

/// Words starting with a that contain infinitely many b.
inline Nfa aThenInfinitelyManyB() {
    return Nfa(ab(), 2, {0}, {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}}, {1}, AutomatonKind::Suba);
}

/// An a six positions before a final a b^omega tail.
inline Nfa aSigma5ABOmega() {
    std::vector<Transition> delta{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (std::size_t q = 1; q <= 5; ++q) {
        delta.push_back({q, 0, q + 1});
        delta.push_back({q, 1, q + 1});
    }
    delta.push_back({6, 0, 7});
    delta.push_back({7, 1, 7});
    return Nfa(ab(), 8, {0}, std::move(delta), {7}, AutomatonKind::Suba);
}

/// (a b^5)^omega.
inline Nfa abbbbbOmega() {
    std::vector<Transition> delta{{0, 0, 1}};
    for (std::size_t q = 1; q <= 5; ++q) delta.push_back({q, 1, (q + 1) % 6});
    return Nfa(ab(), 6, {0}, std::move(delta), {0}, AutomatonKind::Suba);
}

/// Two-state NBA for a* b^omega.
inline Nfa twoStateNba() {
    return Nfa(ab(), 2, {0}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}}, {1}, AutomatonKind::Nba);
}

}  // namespace alma::fixtures
