#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "alma/m2ma.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace alma;

TEST_CASE("words and alphabets") {
    Alphabet sigma({"a", "b"});
    CHECK(sigma.parseWord("a b b") == Word{0, 1, 1});
    CHECK(sigma.parseWord("_").empty());
    CHECK(sigma.parseWord("").empty());
    CHECK(sigma.format({}) == "_");
    CHECK(sigma.format({1, 0}) == "b a");
    CHECK_THROWS_AS((void)sigma.parseWord("a c"), InputError);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
    CHECK_THROWS_AS(Alphabet({"_"}), InputError);
    CHECK(sigma.withSeparator().separator() == Symbol{2});
    CHECK_THROWS((void)sigma.withSeparator().withSeparator());
    CHECK(shortlexLess({1}, {0, 0}));
    CHECK(shortlexLess({0, 0}, {0, 1}));
}

TEST_CASE("membership on the example automaton") {
    auto m = fixtures::exampleM();
    CHECK(m.accepts({}));
    CHECK_FALSE(m.accepts({0}));
    CHECK(m.accepts({1, 1}));
    CHECK(m.stateAfter({0}) == Gf2Vector::fromString("001"));
    CHECK(m.stateAfter({1}) == Gf2Vector::fromString("010"));
    CHECK(m.stateAfter({1, 1}) == Gf2Vector::fromString("101"));
    CHECK_THROWS_AS((void)m.accepts({0, 2}), InputError);
}

TEST_CASE("construction validates shapes") {
    auto sigma = fixtures::ab();
    auto e1 = Gf2Vector::unit(2, 0);
    CHECK_THROWS_AS(M2ma(sigma, e1, {Gf2Matrix::identity(2)}, e1), InputError);
    CHECK_THROWS_AS(M2ma(sigma, e1, {Gf2Matrix::identity(2), Gf2Matrix::identity(3)}, e1), InputError);
    CHECK_THROWS_AS(M2ma(sigma, e1, {Gf2Matrix::identity(2), Gf2Matrix::identity(2)}, Gf2Vector(3)),
                    InputError);
    auto empty = M2ma::emptyLanguage(sigma);
    CHECK(empty.dimension() == 1);
    CHECK_FALSE(empty.accepts({}));
}

TEST_CASE("equivalence") {
    auto m = fixtures::exampleM();
    CHECK(equivalent(m, m));

    auto zeroFinal = M2ma(m.alphabet(), m.initial(), m.transitions(), Gf2Vector(3));
    auto cex = findCounterexample(m, zeroFinal);
    REQUIRE(cex);
    CHECK(cex->empty());

    // Two different dimension-2 presentations of the all-words language.
    Alphabet sigma({"a", "b"});
    M2ma all1(sigma, Gf2Vector::fromString("10"),
              {Gf2Matrix::fromRows({{1, 0}, {0, 1}}), Gf2Matrix::fromRows({{1, 0}, {0, 0}})},
              Gf2Vector::fromString("10"));
    M2ma all2(sigma, Gf2Vector::fromString("11"),
              {Gf2Matrix::fromRows({{1, 1}, {0, 0}}), Gf2Matrix::fromRows({{0, 1}, {1, 0}})},
              Gf2Vector::fromString("01"));
    for (const auto& w : ref::allWords(2, 8)) {
        REQUIRE(all1.accepts(w));
        REQUIRE(all2.accepts(w));
    }
    CHECK(equivalent(all1, all2));

    CHECK_THROWS_AS((void)findCounterexample(m, M2ma::emptyLanguage(Alphabet({"a"}))), InputError);
}

TEST_CASE("reachable DFA of the example automaton") {
    auto dfa = toReachableDfa(fixtures::exampleM());
    std::set<std::string> states, accepting;
    for (std::size_t i = 0; i < dfa.size(); ++i) {
        states.insert(dfa.states[i].toString());
        if (dfa.accepting[i]) accepting.insert(dfa.states[i].toString());
    }
    CHECK(states == std::set<std::string>{"100", "010", "101", "001", "111", "110"});
    CHECK(accepting == std::set<std::string>{"100", "010", "101"});
    CHECK(minimalStateCount(dfa) == 6);
    CHECK(ref::dfaClassCount(fixtures::exampleM()) == 6);
}

TEST_CASE("reachable DFA edge cases") {
    Alphabet sigma({"a"});
    M2ma zeroMu(sigma, Gf2Vector::fromString("1"), {Gf2Matrix(1, 1)}, Gf2Vector::fromString("1"));
    CHECK(toReachableDfa(zeroMu).size() <= 2);

    M2ma identity(sigma, Gf2Vector::fromString("101"), {Gf2Matrix::identity(3)}, Gf2Vector::fromString("100"));
    CHECK(toReachableDfa(identity).size() == 1);
    CHECK(minimalDfaStateCount(identity) == 1);
    CHECK(minimalDfaStateCount(M2ma::emptyLanguage(sigma)) == 1);

    // Two-cycle on e1/e2: 2 reachable states but a cap of 1.
    M2ma swap(sigma, Gf2Vector::fromString("10"), {Gf2Matrix::fromRows({{0, 1}, {1, 0}})},
              Gf2Vector::fromString("10"));
    try {
        (void)toReachableDfa(swap, 1);
        FAIL("expected the cap to trip");
    } catch (const StateCapExceeded& e) {
        CHECK(e.found() > 1);
    }
}

TEST_CASE("random automata against the reference evaluator") {
    gen::Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        auto a = gen::anyM2ma(rng, 6, 3);
        const auto k = a.alphabet().size();
        const auto words = ref::allWords(k, k == 3 ? 6 : 8);
        auto dfa = toReachableDfa(a);
        for (const auto& w : words) {
            REQUIRE(a.accepts(w) == ref::accepts(a, w));
            REQUIRE(dfa.accepts(w) == a.accepts(w));
        }
        for (int i = 0; i < 20; ++i) {
            auto u = gen::word(rng, k, gen::uniform(rng, 0, 10));
            auto v = gen::word(rng, k, gen::uniform(rng, 0, 10));
            CHECK(dot(a.stateAfter(u), a.costateOf(v)) == a.accepts(concat(u, v)));
        }
        CHECK(minimalStateCount(dfa) == ref::dfaClassCount(a));
        auto r = a.reversed();
        for (int i = 0; i < 20; ++i) {
            auto w = gen::word(rng, k, gen::uniform(rng, 0, 12));
            auto rw = w;
            std::reverse(rw.begin(), rw.end());
            CHECK(r.accepts(rw) == a.accepts(w));
        }
    }
}

TEST_CASE("counterexamples are genuine and absence means agreement") {
    gen::Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = gen::uniform(rng, 1, 2);
        const auto da = gen::uniform(rng, 1, 4), db = gen::uniform(rng, 1, 4);
        auto a = gen::m2ma(rng, da, k, 0.4), b = gen::m2ma(rng, db, k, 0.4);
        if (trial % 4 == 0) b = a;
        auto cex = findCounterexample(a, b);
        if (cex) {
            CHECK(a.accepts(*cex) != b.accepts(*cex));
        } else {
            for (const auto& w : ref::allWords(k, 8)) REQUIRE(a.accepts(w) == b.accepts(w));
        }
    }
}
