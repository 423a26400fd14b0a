#pragma once

// Text formats for automata.
//
// Line oriented; `#` starts a comment. M2MA files:
//
//     alphabet: a b
//     dimension: 3
//     final: 1 1 0
//     transition a:
//     0 0 1
//     1 0 0
//     1 1 1
//     transition b:
//     ...
//
// The initial vector is always e1 and never written. SUBA and NBA files:
//
//     alphabet: a b
//     states: 2
//     final: 2
//     transitions:
//     1 a 1
//     1 b 2
//
// with state 1 the only initial state. NBA files also carry `eq-tests:`,
// `eq-maxlen:` and `eq-limit:`. Arbitrary-oracle files carry `alphabet:`,
// `oracle: <shell command>`, `lasso: yes|no` and the same eq-* keys.

#include <optional>
#include <string>
#include <string_view>

#include "alma/m2ma.hpp"
#include "alma/omega.hpp"
#include "alma/oracles.hpp"

namespace alma {

[[nodiscard]] M2ma parseM2maFile(std::string_view text);

struct NfaFile {
    Nfa automaton;
    std::optional<ApproxEqConfig> eq;  // present for NBA files
};

/// kind must be Suba or Nba; NBA files must carry the eq-* parameters.
[[nodiscard]] NfaFile parseNfaFile(std::string_view text, AutomatonKind kind);

struct ArbitraryFile {
    Alphabet alphabet;
    std::string command;
    bool lasso = false;
    ApproxEqConfig eq;
};

[[nodiscard]] ArbitraryFile parseArbitraryFile(std::string_view text);

enum class InputKind { M2ma, Nfa };

/// M2MA when a `dimension:` key comes first, NFA when `states:` does.
[[nodiscard]] InputKind detectInputKind(std::string_view text);

/// Writes an M2MA in the input grammar. Requires initial vector e1.
[[nodiscard]] std::string formatM2ma(const M2ma& a);

[[nodiscard]] std::string readTextFile(const std::string& path);

}  // namespace alma
