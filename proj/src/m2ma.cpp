#include "alma/m2ma.hpp"

#include <deque>
#include <map>
#include <string>
#include <unordered_map>

namespace alma {

M2ma::M2ma(Alphabet alphabet, Gf2Vector initial, std::vector<Gf2Matrix> transitions, Gf2Vector final)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      final_(std::move(final)) {
    const auto d = initial_.size();
    if (d == 0) throw InputError("M2MA dimension must be positive");
    if (final_.size() != d) {
        throw InputError("final vector has length " + std::to_string(final_.size()) +
                         ", expected " + std::to_string(d));
    }
    if (transitions_.size() != alphabet_.size()) {
        throw InputError("expected one transition matrix per symbol (" +
                         std::to_string(alphabet_.size()) + "), got " +
                         std::to_string(transitions_.size()));
    }
    for (std::size_t s = 0; s < transitions_.size(); ++s) {
        if (transitions_[s].rows() != d || transitions_[s].cols() != d) {
            throw InputError("transition matrix for '" + alphabet_.name(static_cast<Symbol>(s)) +
                             "' is not " + std::to_string(d) + "x" + std::to_string(d));
        }
    }
}

M2ma M2ma::emptyLanguage(Alphabet alphabet) {
    std::vector<Gf2Matrix> mus(alphabet.size(), Gf2Matrix(1, 1));
    return M2ma(std::move(alphabet), Gf2Vector::unit(1, 0), std::move(mus), Gf2Vector(1));
}

void M2ma::checkWord(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= alphabet_.size()) {
            throw InputError("symbol #" + std::to_string(w[i]) + " at position " +
                             std::to_string(i + 1) + " is outside the alphabet");
        }
    }
}

Gf2Vector M2ma::stateAfter(const Word& w) const {
    checkWord(w);
    Gf2Vector state = initial_;
    for (Symbol s : w) state = mulLeft(state, transitions_[s]);
    return state;
}

Gf2Vector M2ma::costateOf(const Word& w) const {
    checkWord(w);
    Gf2Vector co = final_;
    for (auto it = w.rbegin(); it != w.rend(); ++it) co = mulRight(transitions_[*it], co);
    return co;
}

bool M2ma::accepts(const Word& w) const { return dot(stateAfter(w), final_); }

M2ma M2ma::reversed() const {
    std::vector<Gf2Matrix> t;
    t.reserve(transitions_.size());
    for (const auto& m : transitions_) t.push_back(m.transposed());
    return M2ma(alphabet_, final_, std::move(t), initial_);
}

std::optional<Word> findCounterexample(const M2ma& a, const M2ma& b) {
    if (!(a.alphabet() == b.alphabet())) throw InputError("cannot compare M2MAs over different alphabets");
    const auto da = a.dimension();
    const auto d = da + b.dimension();

    auto stack = [&](const Gf2Vector& x, const Gf2Vector& y) {
        Gf2Vector v(d);
        for (std::size_t i = 0; i < x.size(); ++i) v.set(i, x.get(i));
        for (std::size_t i = 0; i < y.size(); ++i) v.set(da + i, y.get(i));
        return v;
    };
    const auto final = stack(a.final(), b.final());
    std::vector<std::pair<LinearMap, LinearMap>> maps;
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
        maps.emplace_back(LinearMap(a.transition(s)), LinearMap(b.transition(s)));
    }
    auto step = [&](const Gf2Vector& v, Symbol s) {
        Gf2Vector x(da), y(d - da);
        for (std::size_t i = 0; i < da; ++i) x.set(i, v.get(i));
        for (std::size_t i = da; i < d; ++i) y.set(i - da, v.get(i));
        return stack(maps[s].first.applyLeft(x), maps[s].second.applyLeft(y));
    };

    Gf2Basis basis(d);
    std::deque<std::pair<Gf2Vector, Word>> queue;
    const auto start = stack(a.initial(), b.initial());
    if (start.isZero()) return std::nullopt;
    basis.tryExtend(start);
    queue.emplace_back(start, Word{});
    while (!queue.empty()) {
        auto [v, w] = std::move(queue.front());
        queue.pop_front();
        // Discovery order is breadth first, so the first violation is a shortest label.
        if (dot(v, final)) return w;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            auto next = step(v, s);
            if (basis.full()) break;
            if (basis.tryExtend(next).extended) {
                Word label = w;
                label.push_back(s);
                queue.emplace_back(std::move(next), std::move(label));
            }
        }
    }
    return std::nullopt;
}

StateCapExceeded::StateCapExceeded(std::size_t found, std::size_t cap)
    : InputError("reachable state set exceeds the cap of " + std::to_string(cap) + " states (" +
                 std::to_string(found) + " found)"),
      found_(found) {}

bool ReachableDfa::accepts(const Word& w) const {
    std::size_t q = initial;
    for (Symbol s : w) q = next.at(q).at(s);
    return accepting[q];
}

ReachableDfa toReachableDfa(const M2ma& a, std::size_t stateCap) {
    ReachableDfa dfa;
    std::unordered_map<Gf2Vector, std::size_t, Gf2VectorHash> index;
    std::vector<LinearMap> maps;
    for (const auto& m : a.transitions()) maps.emplace_back(m);

    auto intern = [&](Gf2Vector v) {
        auto [it, inserted] = index.emplace(v, dfa.states.size());
        if (inserted) {
            if (dfa.states.size() >= stateCap) throw StateCapExceeded(dfa.states.size() + 1, stateCap);
            dfa.accepting.push_back(dot(v, a.final()));
            dfa.states.push_back(std::move(v));
            dfa.next.emplace_back();
        }
        return it->second;
    };

    intern(a.initial());
    for (std::size_t q = 0; q < dfa.states.size(); ++q) {
        std::vector<std::size_t> row;
        row.reserve(maps.size());
        for (const auto& m : maps) row.push_back(intern(m.applyLeft(dfa.states[q])));
        dfa.next[q] = std::move(row);
    }
    return dfa;
}

std::size_t minimalStateCount(const ReachableDfa& dfa) {
    const auto n = dfa.size();
    if (n == 0) return 0;
    std::vector<std::size_t> cls(n);
    for (std::size_t q = 0; q < n; ++q) cls[q] = dfa.accepting[q] ? 1 : 0;
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> refined(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<std::size_t> sig;
            sig.reserve(dfa.next[q].size() + 1);
            sig.push_back(cls[q]);
            for (auto t : dfa.next[q]) sig.push_back(cls[t]);
            refined[q] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        cls = std::move(refined);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return classes;
}

std::size_t minimalDfaStateCount(const M2ma& a, std::size_t stateCap) {
    return minimalStateCount(toReachableDfa(a, stateCap));
}

}  // namespace alma
