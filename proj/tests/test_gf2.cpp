#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "alma/gf2.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace alma;

namespace {

const Gf2Matrix kMuA = Gf2Matrix::fromRows({{0, 0, 1}, {1, 0, 0}, {1, 1, 1}});

Gf2Vector bits(std::initializer_list<int> b) { return Gf2Vector::fromBits(b); }

}  // namespace

TEST_CASE("vector basics") {
    auto v = Gf2Vector::fromString("101");
    CHECK(v.size() == 3);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.popcount() == 2);
    CHECK(v.toString() == "101");
    CHECK(Gf2Vector(5).isZero());
    CHECK(Gf2Vector(5).lowestSetBit() == 5);
    CHECK(Gf2Vector::unit(4, 2).lowestSetBit() == 2);
    CHECK_THROWS(Gf2Vector::fromString("10x"));

    Gf2Vector big(130);
    big.set(129);
    CHECK(big.resized(129).isZero());
    CHECK(big.resized(200).get(129));
}

TEST_CASE("dot product") {
    CHECK(dot(bits({1, 0, 1}), bits({1, 1, 0})));
    CHECK_FALSE(dot(bits({0, 0, 0}), bits({1, 1, 1})));
    CHECK_FALSE(dot(bits({1, 1}), bits({1, 1})));
    CHECK_THROWS_AS((void)dot(bits({1, 1}), bits({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("matrix products") {
    CHECK(matMul(Gf2Matrix::identity(3), kMuA) == kMuA);
    CHECK(mulLeft(bits({1, 0, 0}), kMuA) == bits({0, 0, 1}));
    CHECK(mulLeft(bits({1, 1}), Gf2Matrix::fromRows({{1, 1}, {1, 1}})) == bits({0, 0}));
    CHECK_THROWS((void)matMul(Gf2Matrix(2, 3), Gf2Matrix(2, 3)));
    CHECK(mulRight(kMuA, bits({1, 1, 0})) == bits({0, 1, 0}));
}

TEST_CASE("rank") {
    CHECK(rank(Gf2Matrix::identity(7)) == 7);
    CHECK(rank(Gf2Matrix(4, 4)) == 0);
    CHECK(rank(kMuA) == 3);
    CHECK(rank(Gf2Matrix::fromRows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
}

TEST_CASE("solveLinear") {
    CHECK(solveLinear(Gf2Matrix::identity(3), bits({1, 0, 1})) == bits({1, 0, 1}));
    CHECK_FALSE(solveLinear(Gf2Matrix(2, 2), bits({1, 0})).has_value());
    CHECK(solveLinear(Gf2Matrix::fromRows({{1, 1}, {0, 1}}), bits({0, 1})) == bits({1, 1}));
}

TEST_CASE("inverse") {
    auto inv = inverse(kMuA);
    REQUIRE(inv);
    CHECK(matMul(kMuA, *inv).isIdentity());
    CHECK_FALSE(inverse(Gf2Matrix::fromRows({{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("sparse rows use 1-based columns") {
    auto row = SparseRow::fromDense(bits({0, 1, 0, 0, 0, 1}));
    CHECK(row.cols == std::vector<std::uint32_t>{2, 6});
    CHECK(row.toDense(6) == bits({0, 1, 0, 0, 0, 1}));
    CHECK(row.contains(6));
    CHECK_FALSE(row.contains(1));

    SparseRow other{{1, 2}};
    row ^= other;
    CHECK(row.cols == std::vector<std::uint32_t>{1, 6});

    SparseGf2Matrix m(1, 3);
    CHECK_THROWS(m.setRow(0, SparseRow{{3, 2}}));
    CHECK_THROWS(m.setRow(0, SparseRow{{0}}));
    CHECK_THROWS(m.setRow(0, SparseRow{{4}}));
}

TEST_CASE("basis extension") {
    Gf2Basis basis(3);
    CHECK(basis.tryExtend(bits({0, 1, 1})).extended);

    Gf2Basis unitBasis(3);
    CHECK(unitBasis.tryExtend(bits({1, 0, 0})).extended);
    CHECK(unitBasis.tryExtend(bits({0, 1, 0})).extended);
    CHECK(unitBasis.size() == 2);
    auto verdict = unitBasis.tryExtend(bits({1, 1, 0}));
    CHECK_FALSE(verdict.extended);
    CHECK(verdict.coordinates == bits({1, 1}));
    CHECK(unitBasis.size() == 2);
    CHECK_FALSE(unitBasis.tryExtend(Gf2Vector(3)).extended);
}

TEST_CASE("basis coordinates reproduce the vector") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = gen::uniform(rng, 1, 70);
        Gf2Basis basis(d);
        for (int i = 0; i < 40; ++i) {
            auto v = gen::vector(rng, d, 0.3);
            auto verdict = basis.tryExtend(v);
            if (verdict.extended) continue;
            Gf2Vector sum(d);
            for (std::size_t j = 0; j < verdict.coordinates.size(); ++j)
                if (verdict.coordinates.get(j)) sum ^= basis.vectors()[j];
            CHECK(sum == v);
        }
        CHECK(basis.size() <= d);
        auto p = basis.pivots();
        CHECK(std::is_sorted(p.begin(), p.end()));
    }
}

TEST_CASE("dense routines agree with the byte-level reference") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto r = gen::uniform(rng, 1, 80), c = gen::uniform(rng, 1, 80);
        auto m = gen::matrix(rng, r, c, trial % 2 ? 0.1 : 0.5);
        CHECK(rank(m) == ref::rank(ref::toTable(m)));
        CHECK(rank(m.transposed()) == rank(m));

        auto x = gen::vector(rng, c);
        auto rhs = mulRight(m, x);
        auto solved = solveLinear(m, rhs);
        REQUIRE(solved);
        CHECK(mulRight(m, *solved) == rhs);
    }
}

TEST_CASE("sparse and dense agree") {
    gen::Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = gen::uniform(rng, 1, 40);
        const double p = trial % 3 == 0 ? 0.05 : 0.3;
        auto a = gen::matrix(rng, n, n, p), b = gen::matrix(rng, n, n, p);
        auto sa = SparseGf2Matrix::fromDense(a), sb = SparseGf2Matrix::fromDense(b);
        CHECK(sa.toDense() == a);
        CHECK(matMul(sa, sb).toDense() == matMul(a, b));
        auto v = gen::vector(rng, n);
        CHECK(mulLeft(v, sa) == mulLeft(v, a));
        CHECK(mulRight(sa, v) == mulRight(a, v));
        CHECK(rank(sa) == rank(a));
        auto rhs = gen::vector(rng, n);
        auto ds = solveLinear(a, rhs), ss = solveLinear(sa, rhs);
        CHECK(ds.has_value() == ss.has_value());
        if (ss) CHECK(mulRight(a, *ss) == rhs);

        LinearMap map(a);
        CHECK(map.isSparse() == (a.density() < kSparseDensityThreshold));
        CHECK(map.applyLeft(v) == mulLeft(v, a));
        CHECK(map.applyRight(v) == mulRight(a, v));
    }
}
