// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "alma/learner.hpp"
#include "alma/minimize.hpp"
#include "alma/omega.hpp"
#include "alma/oracles.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

#ifndef ALMA_DATA_DIR
#define ALMA_DATA_DIR "data"
#endif

using namespace alma;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double seconds(Clock::time_point since) {
    return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Learned {
    std::size_t minimized;
    std::size_t learned;
    M2ma hypothesis;
};

Learned minimizeAndLearn(const M2ma& target) {
    auto min = minimize(target);
    M2maOracle mq(min.automaton);
    TableEquivalence eq(min.automaton, min.table);
    auto r = learn(mq, eq);
    return {min.automaton.dimension(), r.hypothesis.dimension(), r.hypothesis};
}

std::vector<LassoWord> allLassos(std::size_t k, std::size_t maxU, std::size_t maxV) {
    std::vector<LassoWord> out;
    for (const auto& u : ref::allWords(k, maxU))
        for (const auto& v : ref::allWords(k, maxV))
            if (!v.empty()) out.push_back({u, v});
    return out;
}

// 1. Construction size law.
void sizeLaw(Outcome& o) {
    const auto start = Clock::now();
    gen::Rng rng(101);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            auto s = gen::nfa(rng, n, 2, 0.3, AutomatonKind::Suba);
            auto ufa = subaToUfa(s);
            auto m = ufaToM2ma(ufa);
            o.require(ufa.stateCount() == 2 * n * n + n && m.dimension() == 2 * n * n + n,
                      "size for n=" + std::to_string(n));
        }
    }
    const std::pair<std::size_t, std::size_t> spots[] = {{1, 3}, {2, 10}, {8, 136}, {11, 253}, {21, 903}};
    for (auto [n, expected] : spots) {
        auto s = gen::nfa(rng, n, 2, 0.2, AutomatonKind::Suba);
        const auto size = subaToUfa(s).stateCount();
        o.require(size == expected, "n=" + std::to_string(n) + " gave " + std::to_string(size));
        o.detail << "n=" << n << ":" << size << " ";
    }
    const double t = seconds(start);
    o.require(t < 1.0, "runtime");
    o.detail << "(" << t << " s)";
}

// 2. Dimensions of the omega encodings.
void omegaDimensions(Outcome& o) {
    const auto start = Clock::now();
    struct Row {
        const char* name;
        Nfa suba;
        std::size_t unminimized, learned;
    };
    Row rows[] = {
        {"a^w", fixtures::aOmega(), 3, 3},
        {"aS*(S*bS*)^w", fixtures::aThenInfinitelyManyB(), 10, 5},
        {"S*aS^5ab^w", fixtures::aSigma5ABOmega(), 136, 10},
        {"(ab^5)^w", fixtures::abbbbbOmega(), 78, 43},
    };
    for (auto& row : rows) {
        o.require(ref::isStronglyUnambiguous(row.suba), std::string(row.name) + " is not strongly unambiguous");
        auto target = ufaToM2ma(subaToUfa(row.suba));
        auto r = minimizeAndLearn(target);
        o.require(target.dimension() == row.unminimized && r.learned == row.learned && r.minimized == row.learned,
                  std::string(row.name));
        o.detail << row.name << ":" << target.dimension() << "->" << r.learned << " ";
    }
    const double t = seconds(start);
    o.require(t < 60.0, "runtime");
    o.detail << "(" << t << " s)";
}

// 3. Learner and minimizer agree on dimension.
void learnerAgreement(Outcome& o) {
    const auto start = Clock::now();
    gen::Rng rng(103);
    std::size_t agree = 0;
    for (int i = 0; i < 100; ++i) {
        auto a = gen::anyM2ma(rng, 15, 3);
        auto r = minimizeAndLearn(a);
        const bool ok = r.learned == r.minimized && equivalent(r.hypothesis, a);
        agree += ok;
        o.require(ok, "automaton " + std::to_string(i));
    }
    const double t = seconds(start);
    o.require(t < 120.0, "runtime");
    o.detail << agree << "/100 agree (" << t << " s)";
}

// 4. Minimized dimension equals the brute-force Hankel rank.
void hankel(Outcome& o) {
    const auto start = Clock::now();
    gen::Rng rng(104);
    std::size_t agree = 0;
    constexpr int kCount = 300;
    for (int i = 0; i < kCount; ++i) {
        auto a = gen::anyM2ma(rng, 6, 3);
        const auto d = minimize(a).automaton.dimension();
        const auto h = ref::hankelRank(a, 6);
        // The empty language has rank 0 but is represented with dimension 1.
        const bool ok = d == std::max<std::size_t>(h, 1);
        agree += ok;
        o.require(ok, "automaton " + std::to_string(i));
    }
    const double t = seconds(start);
    o.require(t < 60.0, "runtime");
    o.detail << agree << "/" << kCount << " match (" << t << " s)";
}

// 5. Minimization and learning preserve the language.
void preservation(Outcome& o) {
    const auto start = Clock::now();
    gen::Rng rng(105);
    std::size_t checked = 0;
    for (int i = 0; i < 100; ++i) {
        auto a = gen::anyM2ma(rng, 8, 3);
        auto min = minimize(a).automaton;
        auto r = minimizeAndLearn(a);
        for (const auto& w : ref::allWords(a.alphabet().size(), 8)) {
            const bool f = ref::accepts(a, w);
            o.require(min.accepts(w) == f && r.hypothesis.accepts(w) == f, "exhaustive case " + std::to_string(i));
            ++checked;
        }
    }
    for (int i = 0; i < 30; ++i) {
        auto a = gen::m2ma(rng, gen::uniform(rng, 9, 40), gen::uniform(rng, 1, 4), 0.3);
        auto min = minimize(a).automaton;
        auto r = minimizeAndLearn(a);
        for (int j = 0; j < 1000; ++j) {
            auto w = gen::word(rng, a.alphabet().size(), gen::uniform(rng, 0, 25));
            const bool f = ref::accepts(a, w);
            o.require(min.accepts(w) == f && r.hypothesis.accepts(w) == f, "sampled case " + std::to_string(i));
            ++checked;
        }
    }
    o.detail << checked << " word checks (" << seconds(start) << " s)";
}

// 6. NBA membership against the lasso-graph reference.
void nbaExhaustive(Outcome& o) {
    const auto start = Clock::now();
    const auto lassos = allLassos(2, 3, 3);
    const auto sigma = fixtures::ab();
    std::size_t automata = 0, mismatches = 0;
    auto check = [&](const Nfa& a) {
        ++automata;
        for (const auto& l : lassos)
            if (nbaMq(a, l) != ref::nbaAccepts(a, l.prefix, l.period)) ++mismatches;
    };
    // Every automaton with one or two states.
    for (std::size_t n = 1; n <= 2; ++n) {
        std::vector<Transition> all;
        for (std::size_t p = 0; p < n; ++p)
            for (Symbol s = 0; s < 2; ++s)
                for (std::size_t q = 0; q < n; ++q) all.push_back({p, s, q});
        for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask)
            for (std::size_t fmask = 0; fmask < (std::size_t{1} << n); ++fmask) {
                std::vector<Transition> delta;
                for (std::size_t i = 0; i < all.size(); ++i)
                    if ((mask >> i) & 1U) delta.push_back(all[i]);
                std::vector<std::size_t> final;
                for (std::size_t q = 0; q < n; ++q)
                    if ((fmask >> q) & 1U) final.push_back(q);
                check(Nfa(sigma, n, {0}, std::move(delta), std::move(final), AutomatonKind::Nba));
            }
    }
    const auto enumerated = automata;
    // Three and four states: random transition relations.
    gen::Rng rng(106);
    static constexpr double densities[] = {0.15, 0.3, 0.5};
    for (int i = 0; i < 100000; ++i)
        check(gen::nfa(rng, 3 + (i % 2), 2, densities[i % 3], AutomatonKind::Nba, 0.4));
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    const double t = seconds(start);
    o.require(t < 300.0, "runtime");
    o.detail << enumerated << " enumerated + " << automata - enumerated << " sampled automata x " << lassos.size()
             << " lassos, " << mismatches << " mismatches (" << t << " s)";
}

// 7. Approximate learning of the two-state NBA.
void approximateNba(Outcome& o) {
    NbaOracle target(fixtures::twoStateNba());
    Rng rng(107);
    ApproxEquivalence eq(target, {10000, 25, 100, 0}, rng);
    LearnOptions opts;
    opts.maxEq = 100;
    auto r = learn(target, eq, opts);
    auto report = validateLearned(r.hypothesis, target, {100000, 25, 7007});
    const double rate = static_cast<double>(report.agreements) / static_cast<double>(report.sampleCount);
    o.require(rate >= 0.995, "agreement");
    o.detail << "agreement " << rate * 100 << "% on " << report.sampleCount << " lassos, learned dim "
             << r.hypothesis.dimension() << ", " << r.state.eqCount << " EQs";
}

// 8. Runtime growth from dimension 10 to 40.
void runtime(Outcome& o) {
    gen::Rng rng(108);
    auto average = [&](std::size_t dim, int count, double& worst) {
        double total = 0;
        for (int i = 0; i < count; ++i) {
            auto a = gen::m2ma(rng, dim, 2);
            const auto start = Clock::now();
            auto r = minimizeAndLearn(a);
            const double t = seconds(start);
            o.require(r.learned == r.minimized, "dimension check");
            total += t;
            worst = std::max(worst, t);
        }
        return total / count;
    };
    double worst10 = 0, worst40 = 0;
    const double t10 = average(10, 20, worst10);
    const double t40 = average(40, 5, worst40);
    const double ratio = t40 / t10;
    o.require(worst10 < 5.0, "dim-10 run over 5 s");
    o.require(ratio <= 200.0, "growth factor");
    o.detail << "dim 10 avg " << t10 * 1e3 << " ms (max " << worst10 * 1e3 << " ms), dim 40 avg " << t40 * 1e3
             << " ms, ratio " << ratio;
}

// 9. Property suites.
void properties(Outcome& o) {
    gen::Rng rng(109);
    std::size_t sparse = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto n = gen::uniform(rng, 1, 40);
        auto a = gen::matrix(rng, n, n, i % 2 ? 0.05 : 0.3), b = gen::matrix(rng, n, n, 0.2);
        auto sa = SparseGf2Matrix::fromDense(a), sb = SparseGf2Matrix::fromDense(b);
        auto v = gen::vector(rng, n);
        const bool ok = matMul(sa, sb).toDense() == matMul(a, b) && mulLeft(v, sa) == mulLeft(v, a) &&
                        mulRight(sa, v) == mulRight(a, v) && rank(sa) == rank(a) &&
                        solveLinear(sa, v).has_value() == solveLinear(a, v).has_value();
        sparse += ok;
        o.require(ok, "sparse/dense case " + std::to_string(i));
    }

    std::size_t idempotent = 0;
    for (int i = 0; i < 200; ++i) {
        auto once = minimize(gen::anyM2ma(rng, 12, 3)).automaton;
        auto twice = minimize(once).automaton;
        const bool ok = twice.dimension() == once.dimension() && equivalent(once, twice);
        idempotent += ok;
        o.require(ok, "idempotence case " + std::to_string(i));
    }

    std::size_t crossChecked = 0;
    for (int i = 0; i < 200; ++i) {
        auto min = minimize(gen::anyM2ma(rng, 10, 3));
        TableEquivalence table(min.automaton, min.table);
        std::vector<M2ma> hypotheses{min.automaton};
        M2maOracle mq(min.automaton);
        LearnOptions opts;
        opts.onEquivalenceQuery = [&](const LearnerState& s) { hypotheses.push_back(s.hypothesis); };
        ExactEquivalence exact(min.automaton);
        (void)learn(mq, exact, opts);
        hypotheses.push_back(
            gen::m2ma(rng, gen::uniform(rng, 1, min.automaton.dimension()), min.automaton.alphabet().size()));
        bool ok = true;
        for (const auto& h : hypotheses) ok = ok && table.check(h).has_value() == !equivalent(h, min.automaton);
        crossChecked += ok;
        o.require(ok, "table/direct-sum case " + std::to_string(i));
    }

    std::size_t unambiguous = 0;
    for (int i = 0; i < 100; ++i) {
        auto s = gen::suba(rng, gen::uniform(rng, 1, 4), 2);
        const bool ok = !checkUnambiguous(subaToUfa(s), 8).has_value();
        unambiguous += ok;
        o.require(ok, "UFA case " + std::to_string(i));
    }
    for (const auto& s : {fixtures::aOmega(), fixtures::aThenInfinitelyManyB(), fixtures::abbbbbOmega()})
        o.require(!checkUnambiguous(subaToUfa(s), 8).has_value(), "fixture UFA");

    Alphabet sigma({"a", "b"});
    ExternalOracle parity({sigma, std::string("sh ") + ALMA_DATA_DIR + "/parity_oracle.sh", false});
    Rng eqRng(110);
    ApproxEquivalence eq(parity, {200, 12, 20, 0}, eqRng);
    LearnOptions opts;
    opts.maxEq = 20;
    auto r = learn(parity, eq, opts);
    M2ma evenLength(sigma, Gf2Vector::fromString("10"),
                    {Gf2Matrix::fromRows({{0, 1}, {1, 0}}), Gf2Matrix::fromRows({{0, 1}, {1, 0}})},
                    Gf2Vector::fromString("10"));
    const bool parityOk = r.converged && r.hypothesis.dimension() == 2 && equivalent(r.hypothesis, evenLength);
    o.require(parityOk, "parity learning");

    o.detail << "sparse/dense " << sparse << "/1000, idempotence " << idempotent << "/200, table-EQ "
             << crossChecked << "/200, UFA " << unambiguous << "/100, parity dim " << r.hypothesis.dimension()
             << " (" << parity.processQueries() << " process queries)";
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"construction size law 2n^2+n", sizeLaw},
        {"omega dimension table", omegaDimensions},
        {"learner/minimizer dimension agreement", learnerAgreement},
        {"minimized dimension equals Hankel rank", hankel},
        {"language preservation", preservation},
        {"NBA membership vs lasso-graph reference", nbaExhaustive},
        {"approximate NBA learning >= 99.5% agreement", approximateNba},
        {"runtime sanity", runtime},
        {"property suites", properties},
    };
    int failures = 0, index = 0;
    for (const auto& [name, body] : criteria) {
        ++index;
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("criterion %d: %s - %s: %s\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
