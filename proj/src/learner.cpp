#include "alma/learner.hpp"

#include <algorithm>

namespace alma {

bool CachingOracle::query(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    ++misses_;
    const bool answer = inner_.query(w);
    cache_.emplace(w, answer);
    return answer;
}

LearnerState initialState(const Alphabet& alphabet) {
    return LearnerState{ObservationTable{{}, {}, Gf2Matrix()}, M2ma::emptyLanguage(alphabet)};
}

namespace {

// (f(p.y_1) .. f(p.y_t))
Gf2Vector queryRow(const Word& p, const std::vector<Word>& suffixes, MembershipOracle& mq) {
    Gf2Vector row(suffixes.size());
    for (std::size_t j = 0; j < suffixes.size(); ++j) row.set(j, mq.query(concat(p, suffixes[j])));
    return row;
}

std::size_t emptySuffixIndex(const ObservationTable& table) {
    auto it = std::find_if(table.suffixes.begin(), table.suffixes.end(),
                           [](const Word& y) { return y.empty(); });
    if (it == table.suffixes.end()) throw InvariantError("observation table lacks the empty suffix");
    return static_cast<std::size_t>(it - table.suffixes.begin());
}

}  // namespace

M2ma buildHypothesis(const ObservationTable& table, MembershipOracle& mq) {
    const auto& alphabet = mq.alphabet();
    const auto t = table.prefixes.size();
    if (t == 0) return M2ma::emptyLanguage(alphabet);

    auto inv = inverse(table.block);
    if (!inv) {
        throw InvariantError("observation table block of size " + std::to_string(t) + " is singular");
    }
    const auto eps = emptySuffixIndex(table);

    Gf2Vector initial = mulLeft(queryRow(Word{}, table.suffixes, mq), *inv);
    Gf2Vector final(t);
    std::vector<Gf2Matrix> mus(alphabet.size(), Gf2Matrix(t, t));
    for (std::size_t i = 0; i < t; ++i) {
        final.set(i, table.block.at(i, eps));
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            Word xs = table.prefixes[i];
            xs.push_back(s);
            mus[s].setRow(i, mulLeft(queryRow(xs, table.suffixes, mq), *inv));
        }
    }
    return M2ma(alphabet, std::move(initial), std::move(mus), std::move(final));
}

void processCounterexample(LearnerState& state, const Word& z, MembershipOracle& mq) {
    const auto& h = state.hypothesis;
    const bool target = mq.query(z);
    if (h.accepts(z) == target) {
        throw InvariantError("'" + mq.alphabet().format(z) + "' is not a counterexample");
    }

    auto& table = state.table;
    const auto t = table.prefixes.size();
    if (t == 0) {
        // The zero hypothesis only errs on accepted words.
        table.prefixes = {z};
        table.suffixes = {Word{}};
        table.block = Gf2Matrix::fromRows({{1}});
    } else {
        std::vector<Gf2Vector> columns;
        columns.reserve(t);
        for (std::size_t j = 0; j < t; ++j) columns.push_back(table.block.column(j));

        std::optional<std::pair<std::size_t, std::size_t>> breakpoint;  // (prefix length, suffix index)
        Gf2Vector coords = h.initial();
        Word prefix;
        for (std::size_t k = 0; k < z.size() && !breakpoint; ++k) {
            coords = mulLeft(coords, h.transition(z[k]));
            prefix.push_back(z[k]);
            for (std::size_t j = 0; j < t; ++j) {
                if (dot(coords, columns[j]) != mq.query(concat(prefix, table.suffixes[j]))) {
                    breakpoint = {k, j};
                    break;
                }
            }
        }
        if (!breakpoint) {
            throw InvariantError("no breakpoint found in counterexample '" + mq.alphabet().format(z) + "'");
        }
        const auto [k, j] = *breakpoint;
        Word w(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k));
        Word sy = concat(Word{z[k]}, table.suffixes[j]);

        table.prefixes.push_back(std::move(w));
        table.suffixes.push_back(std::move(sy));
        Gf2Matrix grown(t + 1, t + 1);
        for (std::size_t i = 0; i <= t; ++i) {
            for (std::size_t c = 0; c <= t; ++c) {
                const bool known = i < t && c < t;
                grown.set(i, c, known ? table.block.at(i, c)
                                      : mq.query(concat(table.prefixes[i], table.suffixes[c])));
            }
        }
        table.block = std::move(grown);
    }
    ++state.counterexamples;
    state.hypothesis = buildHypothesis(table, mq);
}

std::optional<Word> findTableInconsistency(const LearnerState& state) {
    const auto& table = state.table;
    const auto& h = state.hypothesis;
    std::vector<Gf2Vector> costates;
    costates.reserve(table.suffixes.size());
    for (const auto& y : table.suffixes) costates.push_back(h.costateOf(y));
    for (std::size_t i = 0; i < table.prefixes.size(); ++i) {
        auto s = h.stateAfter(table.prefixes[i]);
        for (std::size_t j = 0; j < costates.size(); ++j) {
            if (dot(s, costates[j]) != table.block.at(i, j)) return concat(table.prefixes[i], table.suffixes[j]);
        }
    }
    return std::nullopt;
}

LearnResult learn(MembershipOracle& mq, EquivalenceStrategy& eq, const LearnOptions& options) {
    CachingOracle oracle(mq);
    LearnerState state = initialState(mq.alphabet());
    while (true) {
        while (auto z = findTableInconsistency(state)) processCounterexample(state, *z, oracle);
        state.mqCount = oracle.queries();
        if (options.maxEq && state.eqCount >= *options.maxEq) {
            return {state.hypothesis, state, false};
        }

        ++state.eqCount;
        auto counterexample = eq.check(state.hypothesis);
        if (options.onEquivalenceQuery) options.onEquivalenceQuery(state);
        if (!counterexample) return {state.hypothesis, state, true};
        processCounterexample(state, *counterexample, oracle);
        state.mqCount = oracle.queries();
    }
}

TableEquivalence::TableEquivalence(M2ma target, ObservationTable table)
    : target_(std::move(target)), table_(std::move(table)) {
    std::stable_sort(table_.prefixes.begin(), table_.prefixes.end(), shortlexLess);
}

std::optional<Word> TableEquivalence::check(const M2ma& hypothesis) {
    if (!(hypothesis.alphabet() == target_.alphabet())) {
        throw InputError("hypothesis and target alphabets differ");
    }
    // An empty table means the target is the empty language.
    if (table_.prefixes.empty()) return findCounterexample(hypothesis, target_);
    const auto& ys = table_.suffixes;
    std::vector<Gf2Vector> hCo, tCo;
    for (const auto& y : ys) {
        hCo.push_back(hypothesis.costateOf(y));
        tCo.push_back(target_.costateOf(y));
    }
    auto firstMismatch = [&](const Gf2Vector& hs, const Gf2Vector& ts) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (dot(hs, hCo[j]) != dot(ts, tCo[j])) return j;
        }
        return std::nullopt;
    };

    for (const auto& x : table_.prefixes) {
        const auto hs = hypothesis.stateAfter(x);
        const auto ts = target_.stateAfter(x);
        if (auto j = firstMismatch(hs, ts)) return concat(x, ys[*j]);
        for (Symbol s = 0; s < target_.alphabet().size(); ++s) {
            if (auto j = firstMismatch(mulLeft(hs, hypothesis.transition(s)), mulLeft(ts, target_.transition(s)))) {
                return concat(x, s, ys[*j]);
            }
        }
    }
    return std::nullopt;
}

std::string printTable(const LearnerState& state) {
    if (state.table.prefixes.empty()) return "(empty table)\n";
    return renderTable(state.table, state.hypothesis.alphabet());
}

}  // namespace alma
