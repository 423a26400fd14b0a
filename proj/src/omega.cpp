#include "alma/omega.hpp"

#include <algorithm>
#include <string>

#include "alma/errors.hpp"

namespace alma {

const char* toString(AutomatonKind kind) {
    switch (kind) {
        case AutomatonKind::Nba: return "nba";
        case AutomatonKind::Suba: return "suba";
        case AutomatonKind::Ufa: return "ufa";
    }
    return "?";
}

Nfa::Nfa(Alphabet alphabet, std::size_t stateCount, std::vector<std::size_t> initial,
         std::vector<Transition> transitions, std::vector<std::size_t> final, AutomatonKind kind)
    : alphabet_(std::move(alphabet)),
      stateCount_(stateCount),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      final_(std::move(final)),
      finalMask_(stateCount, false),
      successors_(stateCount * alphabet_.size()),
      kind_(kind) {
    auto checkState = [&](std::size_t q, const char* what) {
        if (q >= stateCount_) {
            throw InputError(std::string(what) + " state " + std::to_string(q + 1) +
                             " is out of range 1.." + std::to_string(stateCount_));
        }
    };
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
    std::sort(final_.begin(), final_.end());
    final_.erase(std::unique(final_.begin(), final_.end()), final_.end());
    for (auto q : initial_) checkState(q, "initial");
    for (auto q : final_) {
        checkState(q, "final");
        finalMask_[q] = true;
    }

    std::sort(transitions_.begin(), transitions_.end());
    if (std::adjacent_find(transitions_.begin(), transitions_.end()) != transitions_.end()) {
        throw InputError("duplicate transition");
    }
    for (const auto& t : transitions_) {
        checkState(t.from, "transition source");
        checkState(t.to, "transition target");
        if (t.symbol >= alphabet_.size()) throw InputError("transition symbol outside the alphabet");
        successors_[t.from * alphabet_.size() + t.symbol].push_back(t.to);
    }
}

Word encodeLasso(const LassoWord& lasso, Symbol separator) {
    return concat(lasso.prefix, separator, lasso.period);
}

std::optional<LassoWord> decodeLasso(const Word& w, Symbol separator) {
    auto it = std::find(w.begin(), w.end(), separator);
    if (it == w.end() || std::find(it + 1, w.end(), separator) != w.end() || it + 1 == w.end()) {
        return std::nullopt;
    }
    return LassoWord{Word(w.begin(), it), Word(it + 1, w.end())};
}

std::size_t ufaPeriodState(std::size_t n, std::size_t p, std::size_t q, bool sawFinal) {
    return n + (p * n + q) * 2 + (sawFinal ? 1 : 0);
}

Nfa subaToUfa(const Nfa& suba) {
    if (suba.kind() != AutomatonKind::Suba) {
        throw InputError(std::string("subaToUfa expects a SUBA, got ") + toString(suba.kind()));
    }
    const auto n = suba.stateCount();
    const auto sigma = suba.alphabet().size();
    auto alphabet = suba.alphabet().withSeparator();
    const auto dollar = static_cast<Symbol>(sigma);

    std::vector<Transition> delta(suba.transitions());
    for (std::size_t q = 0; q < n; ++q) delta.push_back({q, dollar, ufaPeriodState(n, q, q, false)});
    for (const auto& t : suba.transitions()) {
        const bool entersFinal = suba.isFinal(t.to);
        for (std::size_t p = 0; p < n; ++p) {
            for (bool b : {false, true}) {
                delta.push_back({ufaPeriodState(n, p, t.from, b), t.symbol,
                                 ufaPeriodState(n, p, t.to, b || entersFinal)});
            }
        }
    }
    std::vector<std::size_t> final;
    for (std::size_t p = 0; p < n; ++p) final.push_back(ufaPeriodState(n, p, p, true));

    return Nfa(std::move(alphabet), 2 * n * n + n, suba.initial(), std::move(delta), std::move(final),
               AutomatonKind::Ufa);
}

M2ma ufaToM2ma(const Nfa& ufa) {
    const auto n = ufa.stateCount();
    if (n == 0) throw InputError("cannot convert an automaton without states");
    Gf2Vector initial(n), final(n);
    for (auto q : ufa.initial()) initial.set(q);
    for (auto q : ufa.final()) final.set(q);
    std::vector<Gf2Matrix> mus(ufa.alphabet().size(), Gf2Matrix(n, n));
    for (const auto& t : ufa.transitions()) mus[t.symbol].set(t.from, t.to);
    return M2ma(ufa.alphabet(), std::move(initial), std::move(mus), std::move(final));
}

namespace {

using StateSet = std::vector<bool>;

void requirePeriod(const LassoWord& w) {
    if (w.period.empty()) throw InputError("lasso word needs a nonempty period");
}

void checkSymbols(const Nfa& a, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= a.alphabet().size()) {
            throw InputError("symbol #" + std::to_string(w[i]) + " at position " + std::to_string(i + 1) +
                             " is outside the alphabet");
        }
    }
}

StateSet readWord(const Nfa& a, StateSet current, const Word& w) {
    for (Symbol s : w) {
        StateSet next(a.stateCount(), false);
        for (std::size_t q = 0; q < a.stateCount(); ++q) {
            if (!current[q]) continue;
            for (auto t : a.successors(q, s)) next[t] = true;
        }
        current = std::move(next);
    }
    return current;
}

// States reachable from `from` on a positive number of copies of v.
StateSet reachable(const Nfa& a, const StateSet& from, const Word& v) {
    StateSet result = readWord(a, from, v);
    while (true) {
        auto more = readWord(a, result, v);
        bool grew = false;
        for (std::size_t q = 0; q < more.size(); ++q) {
            if (more[q] && !result[q]) {
                result[q] = true;
                grew = true;
            }
        }
        if (!grew) return result;
    }
}

// Same over (state, saw-final) pairs, indexed 2*q + bit. The bit turns on when a
// transition enters a final state.
StateSet readWordTracked(const Nfa& a, StateSet current, const Word& w) {
    for (Symbol s : w) {
        StateSet next(2 * a.stateCount(), false);
        for (std::size_t q = 0; q < a.stateCount(); ++q) {
            for (std::size_t bit = 0; bit < 2; ++bit) {
                if (!current[2 * q + bit]) continue;
                for (auto t : a.successors(q, s)) next[2 * t + ((bit != 0 || a.isFinal(t)) ? 1 : 0)] = true;
            }
        }
        current = std::move(next);
    }
    return current;
}

StateSet reachableTracked(const Nfa& a, const StateSet& from, const Word& v) {
    StateSet result = readWordTracked(a, from, v);
    while (true) {
        auto more = readWordTracked(a, result, v);
        bool grew = false;
        for (std::size_t i = 0; i < more.size(); ++i) {
            if (more[i] && !result[i]) {
                result[i] = true;
                grew = true;
            }
        }
        if (!grew) return result;
    }
}

StateSet initialSet(const Nfa& a) {
    StateSet s(a.stateCount(), false);
    for (auto q : a.initial()) s[q] = true;
    return s;
}

}  // namespace

bool subaMq(const Nfa& suba, const LassoWord& w) {
    if (suba.kind() != AutomatonKind::Suba) {
        throw InputError(std::string("subaMq expects a SUBA, got ") + toString(suba.kind()));
    }
    requirePeriod(w);
    checkSymbols(suba, w.prefix);
    checkSymbols(suba, w.period);
    auto afterPrefix = readWord(suba, initialSet(suba), w.prefix);
    for (std::size_t q = 0; q < suba.stateCount(); ++q) {
        if (!afterPrefix[q]) continue;
        StateSet start(2 * suba.stateCount(), false);
        start[2 * q] = true;
        if (readWordTracked(suba, std::move(start), w.period)[2 * q + 1]) return true;
    }
    return false;
}

bool nbaMq(const Nfa& nba, const LassoWord& w) {
    if (nba.kind() == AutomatonKind::Ufa) throw InputError("nbaMq expects a Buchi automaton, got a ufa");
    requirePeriod(w);
    checkSymbols(nba, w.prefix);
    checkSymbols(nba, w.period);
    auto candidates = readWord(nba, initialSet(nba), w.prefix);
    auto later = reachable(nba, candidates, w.period);
    for (std::size_t q = 0; q < later.size(); ++q) candidates[q] = candidates[q] || later[q];

    for (std::size_t s = 0; s < nba.stateCount(); ++s) {
        if (!candidates[s]) continue;
        StateSet start(2 * nba.stateCount(), false);
        start[2 * s] = true;
        if (reachableTracked(nba, start, w.period)[2 * s + 1]) return true;
    }
    return false;
}

std::optional<Word> checkUnambiguous(const Nfa& nfa, std::size_t maxLen) {
    // Breadth first over words, run counts saturated at 2; dead branches are pruned.
    using Counts = std::vector<std::uint8_t>;
    auto acceptingRuns = [&](const Counts& c) {
        unsigned total = 0;
        for (auto q : nfa.final()) total += c[q];
        return total;
    };

    Counts start(nfa.stateCount(), 0);
    for (auto q : nfa.initial()) start[q] = 1;
    std::vector<std::pair<Word, Counts>> level{{Word{}, start}};
    for (std::size_t len = 0; len <= maxLen && !level.empty(); ++len) {
        for (const auto& [w, c] : level) {
            if (acceptingRuns(c) >= 2) return w;
        }
        if (len == maxLen) break;
        std::vector<std::pair<Word, Counts>> next;
        for (const auto& [w, c] : level) {
            for (Symbol s = 0; s < nfa.alphabet().size(); ++s) {
                Counts n(nfa.stateCount(), 0);
                bool alive = false;
                for (std::size_t q = 0; q < nfa.stateCount(); ++q) {
                    if (c[q] == 0) continue;
                    for (auto t : nfa.successors(q, s)) {
                        n[t] = static_cast<std::uint8_t>(std::min(2, n[t] + c[q]));
                        alive = true;
                    }
                }
                if (!alive) continue;
                Word ext = w;
                ext.push_back(s);
                next.emplace_back(std::move(ext), std::move(n));
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

}  // namespace alma
